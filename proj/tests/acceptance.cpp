// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tfreud/cli.hpp"
#include "tfreud/electro.hpp"
#include "tfreud/operators.hpp"
#include "tfreud/recurrence.hpp"
#include "tfreud/verify.hpp"
#include "tfreud/zeros.hpp"

using namespace tfreud;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  // Values that must not move when the precision doubles.
  std::vector<std::string> rounded;
  std::vector<std::pair<std::string, bool>> verdicts;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void absorb(const VerificationReport& rep) {
    for (const auto& r : rep.records) {
      verdicts.emplace_back(r.name, r.pass);
      require(r.pass, r.name + " max " + r.max_residual.to_string(3) + " > tol " + r.tolerance.to_string(3));
    }
  }
};

// 1. Table reproduction through the CLI.
Outcome table_reproduction(int scale) {
  Outcome o;
  const int bits = 256 * scale;
  std::ostringstream out, err;
  const int code = run_cli({"zeros", "--table-check", "--bits", std::to_string(bits)}, out, err);
  for (const auto& r : table_check(14, bits)) {
    o.rounded.push_back(r.smallest);
    o.rounded.push_back(r.largest);
    const auto i = static_cast<size_t>(r.n - 1);
    o.require(r.smallest_ok, "x_{" + std::to_string(r.n) + ",1}=" + r.smallest + " vs " + kTableSmallest[i]);
    o.require(r.largest_ok, "x_{" + std::to_string(r.n) + "," + std::to_string(r.n) + "}=" + r.largest + " vs " +
                                kTableLargest[i]);
  }
  o.require((code == 0) == o.pass, "CLI exit code " + std::to_string(code) + " disagrees with the comparison");
  o.verdicts.emplace_back("table", o.pass);
  return o;
}

// 2. x_{1,1}(1) = Gamma(1/2)/Gamma(1/4) against the quadrature oracle.
Outcome closed_form_anchor(int scale) {
  Outcome o;
  const PrecisionContext ctx(256 * scale);
  auto s = ctx.scope();
  const Real x11 = zeros(chebyshev_coeffs(Real(1), 1, ctx), 1).smallest();
  const Real ref = oracle::gamma_inv(2) / oracle::gamma_inv(4);
  const Real rel = abs(x11 / ref - 1);
  o.require(rel <= Real("1e-12"), "relative error " + rel.to_string(3));
  o.rounded.push_back(x11.to_fixed(12));
  o.verdicts.emplace_back("anchor", o.pass);
  o.detail = o.pass ? "x_{1,1} = " + x11.to_string(20) + ", rel " + rel.to_string(3) : o.detail;
  return o;
}

SuiteConfig suite(std::vector<double> zs, int n_max, int scale) {
  SuiteConfig cfg;
  cfg.z_values = std::move(zs);
  cfg.n_max = n_max;
  cfg.bits = scale == 1 ? 0 : scale * suite_bits(cfg, n_max + 4);
  cfg.self_consistency = false;
  return cfg;
}

// 3. Laguerre-Freud equations and identities (i)/(ii), n <= 48, plus the
// fault-injection negative control.
Outcome laguerre_freud(int scale) {
  Outcome o;
  const SuiteConfig cfg = suite({0.25, 1.0, 4.0}, 48, scale);
  VerificationReport rep;
  check_laguerre_freud(cfg, rep);
  o.absorb(rep);
  SuiteConfig faulty = suite({1.0}, 48, scale);
  faulty.fault = FaultSpec::parse("a:3:1e-6");
  VerificationReport bad;
  check_laguerre_freud(faulty, bad);
  for (const char* name : {"lf-eq1", "lf-eq2", "lf-eqI"}) {
    const bool failed = !bad.find(name)->pass;
    o.require(failed, std::string("fault injection did not fail ") + name);
    o.verdicts.emplace_back(std::string("fault:") + name, failed);
  }
  return o;
}

// 4. Operator identities: n <= 30 for structure/lowering/raising, n <= 20 for
// the holonomic equations, Lax block and J^4 rows at M = 20.
Outcome operator_identities(int scale) {
  Outcome o;
  // n <= 30 covers the n <= 20 range of the holonomic checks; the table has
  // 35 rows, so the Lax block runs at M = 20.
  VerificationReport rep;
  check_operators(suite({0.25, 1.0, 4.0}, 30, scale), rep);
  o.absorb(rep);
  const CheckRecord* lax = rep.find("lax-block");
  o.require(lax->n_lo == 20, "Lax block not at M = 20");
  return o;
}

// 5. Scaling laws across z in {1/16, 1/4, 4, 16}.
Outcome scaling_laws(int scale) {
  Outcome o;
  VerificationReport rep;
  check_scaling(suite({1.0}, 16, scale), rep);
  o.absorb(rep);
  return o;
}

// 6. Limit constants exactly; ratio trend at z = 1.
Outcome asymptotics(int) {
  Outcome o;
  const ConstantsCheck c = asymptotic_constants_check();
  o.require(c.wq1_reduced, "3A^2+6AB^2+B^4/2 != 1/4");
  o.require(c.a_from_b, "A != B^2/4");
  o.require(c.all(), "constant identities");
  const PrecisionContext ctx = PrecisionContext::for_degree(256);
  auto s = ctx.scope();
  const RecurrenceTable t = chebyshev_coeffs(Real(1), 256, ctx);
  Real pa(10), pb(10);
  std::string trail;
  for (int n : {16, 32, 64, 128, 256}) {
    const auto [ra, rb] = asymptotic_ratio(t, n);
    const Real da = abs(ra - 1), db = abs(rb - 1);
    o.require(da < pa && db < pb, "deviation not decreasing at n=" + std::to_string(n));
    pa = da;
    pb = db;
    trail += " n=" + std::to_string(n) + ":" + ra.to_string(5) + "/" + rb.to_string(5);
  }
  o.require(pa < Real("0.1") && pb < Real("0.1"), "ratio at n=256 not within 0.1");
  if (o.pass) o.detail = "ratios a/b:" + trail;
  return o;
}

// 7. Density normalization, representations, Kolmogorov distances.
Outcome density_checks(int) {
  Outcome o;
  PrecisionScope s(128);
  const DensityModel m{Real(1)};
  const Real norm = m.normalization();
  o.require(abs(norm - 1) <= Real("1e-6"), "normalization " + norm.to_string(12));
  Real worst(0);
  for (int i = 1; i <= 18; ++i) {
    const Real x = m.beta_t * Real(i) / 20;
    const Real sv = m.series(x);
    worst = max(worst, abs(sv - m.integral(x)) / sv);
  }
  o.require(worst <= Real("1e-8"), "series vs integral " + worst.to_string(3));
  std::vector<Real> d;
  for (int n : {50, 100, 200}) d.push_back(empirical_density_distance(n, n, Real(1)));
  o.require(d[1] < d[0] && d[2] < d[1], "Kolmogorov distances not strictly decreasing");
  if (o.pass) {
    o.detail = "norm-1 " + (norm - 1).to_string(2) + ", KS " + d[0].to_string(4) + " > " + d[1].to_string(4) + " > " +
               d[2].to_string(4);
  }
  return o;
}

// 8. Electrostatic equilibrium.
Outcome electrostatics(int) {
  Outcome o;
  const PrecisionContext ctx = PrecisionContext::for_degree(14);
  auto s = ctx.scope();
  const RecurrenceTable t = chebyshev_coeffs(Real(1), 14, ctx);
  const auto polys = poly_table(t);
  Real worst(0), worst_order(0);
  for (int n = 1; n <= 12; ++n) {
    const ZeroSet zs = zeros(t, n);
    const Stationarity st = stationarity_check(zs.x, n, t, polys, Real("1e-3"));
    worst = max(worst, st.ratio());
    const Real e1 = gradient_fd_error(zs.x, n, t, polys, Real("1e-6"));
    const Real e2 = gradient_fd_error(zs.x, n, t, polys, Real("5e-7"));
    if (n >= 2) worst_order = max(worst_order, abs(e1 / e2 - 4));
  }
  o.require(worst <= Real("1e-8"), "gradient ratio " + worst.to_string(3));
  o.require(worst_order < Real("0.1"), "finite-difference error not O(h^2)");
  if (o.pass) o.detail = "max |grad|/perturbed " + worst.to_string(3) + ", |e(h)/e(h/2)-4| " + worst_order.to_string(3);
  return o;
}

// 9. Bound check with the published largest zeros on the left.
Outcome bound_check(int) {
  Outcome o;
  const PrecisionContext ctx = PrecisionContext::for_degree(14);
  auto s = ctx.scope();
  const RecurrenceTable t = chebyshev_coeffs(Real(1), 14, ctx);
  const auto polys = poly_table(t);
  Real tightest(100);
  for (int n = 2; n <= 14; ++n) {
    const Real lhs(std::string_view(kTableLargest[n - 1]));
    const Real bound = largest_zero_bound(polys, t, n, Real("1e-3"));
    o.require(lhs < bound, "n=" + std::to_string(n) + ": " + lhs.to_string(5) + " >= " + bound.to_string(5));
    tightest = min(tightest, bound / lhs);
  }
  if (o.pass) o.detail = "smallest bound/x_nn " + tightest.to_string(4);
  return o;
}

using Criterion = std::function<Outcome(int)>;

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"table reproduction", table_reproduction}, {"closed-form anchor", closed_form_anchor},
      {"Laguerre-Freud suite", laguerre_freud},   {"operator identities", operator_identities},
      {"scaling laws", scaling_laws},             {"asymptotics", asymptotics},
      {"density", density_checks},                {"electrostatics", electrostatics},
      {"bound check", bound_check},
  };
  bool all = true;
  std::vector<Outcome> base;
  int idx = 0;
  for (const auto& [name, fn] : criteria) {
    ++idx;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = fn(1);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %s (%.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", idx, name.c_str(), secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
    if (idx <= 5) base.push_back(std::move(o));
  }

  // 10. Criteria 1-5 at doubled precision: same verdicts, same rounded values.
  {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (size_t i = 0; i < base.size(); ++i) {
      const Outcome twice = criteria[i].second(2);
      const bool same = twice.pass == base[i].pass && twice.verdicts == base[i].verdicts &&
                        twice.rounded == base[i].rounded;
      if (!same) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("criterion ") + std::to_string(i + 1) + " changed";
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion 10: self-consistency at doubled precision (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", secs,
                detail.empty() ? "" : ": ", detail.c_str());
    all = all && ok;
  }
  return all ? 0 : 1;
}
