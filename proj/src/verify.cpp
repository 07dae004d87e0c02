#include "tfreud/verify.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

#include "tfreud/electro.hpp"
#include "tfreud/errors.hpp"
#include "tfreud/moments.hpp"
#include "tfreud/operators.hpp"
#include "tfreud/recurrence.hpp"
#include "tfreud/zeros.hpp"

namespace tfreud {

bool VerificationReport::pass() const {
  for (const auto& r : records) {
    if (!r.pass) return false;
  }
  return true;
}

const CheckRecord* VerificationReport::find(const std::string& name) const {
  for (const auto& r : records) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::vector<std::string> VerificationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& r : records) {
    if (!r.pass) out.push_back(r.name);
  }
  return out;
}

FaultSpec FaultSpec::parse(const std::string& spec) {
  const auto bad = [&] { return DomainError("fault spec '" + spec + "' is not of the form a:K:DELTA or b:K:DELTA"); };
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : spec.find(':', c1 + 1);
  if (c1 != 1 || c2 == std::string::npos || (spec[0] != 'a' && spec[0] != 'b')) throw bad();
  FaultSpec f{spec[0], 0, 0.0};
  const char* first = spec.data() + c1 + 1;
  const char* mid = spec.data() + c2;
  const char* last = spec.data() + spec.size();
  auto [p1, e1] = std::from_chars(first, mid, f.index);
  if (e1 != std::errc() || p1 != mid || f.index < 0) throw bad();
  auto [p2, e2] = std::from_chars(mid + 1, last, f.delta);
  if (e2 != std::errc() || p2 != last || mid + 1 == last) throw bad();
  if (f.which == 'a' && f.index == 0) throw DomainError("fault spec: a_0 is fixed at zero");
  return f;
}

int suite_bits(const SuiteConfig& cfg, int n_max) {
  return cfg.bits > 0 ? cfg.bits : PrecisionContext::policy_bits(n_max);
}

namespace {

// Extra rows so every identity up to cfg.n_max has the coefficients it reads.
constexpr int kHeadroom = 4;

struct Built {
  PrecisionContext ctx;
  RecurrenceTable tbl;
  std::vector<MonicPoly> polys;
};

Built build(const SuiteConfig& cfg, double z, bool with_fault = true) {
  const int n_table = cfg.n_max + kHeadroom;
  const PrecisionContext ctx(suite_bits(cfg, n_table));
  auto scope = ctx.scope();
  RecurrenceTable tbl = chebyshev_coeffs(Real(z), n_table, ctx, cfg.guard_bits);
  if (with_fault && cfg.fault) {
    if (cfg.fault->index > n_table) {
      throw DomainError("fault spec index " + std::to_string(cfg.fault->index) + " beyond the table (n <= " +
                        std::to_string(n_table) + ")");
    }
    tbl = tbl.perturbed(cfg.fault->which, cfg.fault->index, Real(cfg.fault->delta));
  }
  std::vector<MonicPoly> polys = poly_table(tbl);
  return {ctx, std::move(tbl), std::move(polys)};
}

// Accumulates one record.
class Acc {
 public:
  Acc(std::string name, std::vector<double> zs) : rec_{std::move(name), -1, -1, std::move(zs), Real(0), Real(0), true} {}

  void span(int n) {
    if (rec_.n_lo < 0 || n < rec_.n_lo) rec_.n_lo = n;
    if (n > rec_.n_hi) rec_.n_hi = n;
  }

  void residual(int n, const Residual& r, const PrecisionContext& ctx) {
    span(n);
    rec_.tolerance = max(rec_.tolerance, ctx.verify_tol(Real(1)));
    rec_.max_residual = max(rec_.max_residual, r.ratio());
    if (!r.within(ctx)) rec_.pass = false;
  }

  void value(int n, const Real& v, const Real& tol) {
    span(n);
    rec_.tolerance = max(rec_.tolerance, tol);
    rec_.max_residual = max(rec_.max_residual, abs(v));
    if (!(abs(v) <= tol)) rec_.pass = false;
  }

  // Boolean property: max_residual counts violations.
  void flag(int n, bool ok) {
    span(n);
    if (!ok) {
      rec_.max_residual += 1;
      rec_.pass = false;
    }
  }

  void commit(VerificationReport& rep) {
    if (rec_.n_lo < 0) rec_.n_lo = rec_.n_hi = 0;
    rep.records.push_back(std::move(rec_));
  }

 private:
  CheckRecord rec_;
};

const std::vector<double> kScalingZ{1.0 / 16, 1.0 / 4, 4.0, 16.0};

}  // namespace

void check_moments(const SuiteConfig& cfg, VerificationReport& rep) {
  const int N = 2 * cfg.n_max + 1;
  const PrecisionContext ctx(suite_bits(cfg, cfg.n_max + kHeadroom));
  auto scope = ctx.scope();
  Acc rec("moment-recurrence", cfg.z_values);
  Acc tail("stieltjes-tail", cfg.z_values);
  Acc cls("pearson-class", cfg.z_values);
  for (double zd : cfg.z_values) {
    const Real z(zd);
    const MomentSequence mseq(z, N + 4);
    for (int n = 0; n <= N; ++n) rec.residual(n, moment_recurrence_residual(mseq, n), ctx);
    for (int M = 3; M <= N; M += 4) {
      for (double td : {2.0, 3.0, 5.0}) {
        const Real t(td);
        const Real t4 = t * t * t * t;
        const Real diff = stieltjes_ode_residual(t, z, M) - stieltjes_tail(t, z, M);
        // Every term is positive for t > 0; the largest is 4z t^4 S_M.
        const Real scale = 4 * z * t4 * stieltjes_partial(t, z, M) + abs(stieltjes_tail(t, z, M));
        tail.residual(M, {diff, scale}, ctx);
      }
    }
    cls.flag(0, class_check(z).cls == 3);
  }
  rec.commit(rep);
  tail.commit(rep);
  cls.commit(rep);
}

void check_laguerre_freud(const SuiteConfig& cfg, VerificationReport& rep) {
  Acc lf1("lf-eq1", cfg.z_values), lf2("lf-eq2", cfg.z_values), lfi("lf-eqI", cfg.z_values);
  Acc id1("identity-i", cfg.z_values), id2("identity-ii", cfg.z_values);
  Acc b1("compat-B1", cfg.z_values), b2("compat-B2", cfg.z_values);
  for (double zd : cfg.z_values) {
    const Built b = build(cfg, zd);
    auto scope = b.ctx.scope();
    for (int n = 0; n <= cfg.n_max; ++n) {
      lf1.residual(n, lf_residual_1(b.tbl, n), b.ctx);
      lf2.residual(n, lf_residual_2(b.tbl, n), b.ctx);
      lfi.residual(n, lf_residual_I(b.tbl, n), b.ctx);
      if (n >= 1) {
        id1.residual(n, identity_i(b.tbl, b.polys, n), b.ctx);
        id2.residual(n, identity_ii(b.tbl, b.polys, n), b.ctx);
        const auto [r1, r2] = compat_residuals(b.tbl, b.polys, n, sample_grid(n, b.tbl.z()));
        b1.residual(n, r1, b.ctx);
        b2.residual(n, r2, b.ctx);
      }
    }
  }
  for (Acc* a : {&lf1, &lf2, &lfi, &id1, &id2, &b1, &b2}) a->commit(rep);
}

void check_operators(const SuiteConfig& cfg, VerificationReport& rep) {
  Acc st("structure", cfg.z_values), ste("structure-explicit", cfg.z_values), sca("structure-coeffs", cfg.z_values);
  Acc low("lowering", cfg.z_values), rai("raising", cfg.z_values), bet("lowering-beta-route", cfg.z_values);
  Acc hdn("holonomic-Dn", cfg.z_values), hch("holonomic-chen", cfg.z_values), con("confluent", cfg.z_values);
  Acc j4("j4-rows", cfg.z_values), lax("lax-block", cfg.z_values);
  for (double zd : cfg.z_values) {
    const Built b = build(cfg, zd);
    auto scope = b.ctx.scope();
    for (int n = 0; n <= cfg.n_max; ++n) {
      const std::vector<Real> grid = sample_grid(n, b.tbl.z());
      st.residual(n, structure_residual(b.tbl, b.polys, n).worst_coefficient(), b.ctx);
      ste.residual(n, structure_residual_explicit(b.tbl, b.polys, n).worst_coefficient(), b.ctx);
      sca.residual(n, structure_coeff_agreement(b.tbl, n), b.ctx);
      const LoweringData ld = lowering_data(b.tbl, n);
      low.residual(n, lowering_apply(b.polys, ld).worst_coefficient(), b.ctx);
      rai.residual(n, raising_apply(b.polys, ld, b.tbl).worst_coefficient(), b.ctx);
      if (n >= 3) bet.residual(n, lowering_beta_route(b.tbl, ld, grid), b.ctx);
      if (n >= 1) {
        hdn.residual(n, holonomic_residual_Dn(b.polys, b.tbl, n, grid), b.ctx);
        hch.residual(n, holonomic_residual_chen(b.tbl, b.polys, n, grid), b.ctx);
      }
      con.residual(n, confluent_check(b.polys, b.tbl, n, grid), b.ctx);
      j4.residual(n, j4_row_residual(b.tbl, n), b.ctx);
    }
    const int M = std::min(20, b.tbl.n_max() + 1);
    if (M >= 10) lax.residual(M, lax_block_check(b.tbl, M), b.ctx);
  }
  for (Acc* a : {&st, &ste, &sca, &low, &rai, &bet, &hdn, &hch, &con, &j4, &lax}) a->commit(rep);
}

void check_scaling(const SuiteConfig& cfg, VerificationReport& rep) {
  SuiteConfig unit = cfg;
  unit.fault.reset();
  const Built one = build(unit, 1.0);
  const PrecisionContext& ctx = one.ctx;
  auto scope = ctx.scope();
  Acc mom("scaling-moments", kScalingZ), coef("scaling-coeffs", kScalingZ), hs("scaling-h", kScalingZ);
  Acc hd("scaling-h-derivative", kScalingZ), sg("scaling-sigma", kScalingZ), sgb("sigma-difference", {1.0});
  Acc zs("scaling-zeros", kScalingZ), z16("scaling-zeros-z16", {16.0});
  for (int n = 0; n <= cfg.n_max; ++n) {
    sgb.value(n, one.polys[static_cast<size_t>(n + 1)].sigma() - one.polys[static_cast<size_t>(n)].sigma() - one.tbl.b(n),
              ctx.verify_tol(abs(one.tbl.b(n)) + abs(one.polys[static_cast<size_t>(n + 1)].sigma())));
  }
  for (double zd : kScalingZ) {
    const Built b = build(unit, zd);
    const Real z(zd);
    const Real z4 = root(z, 4);
    for (int n = 0; n <= 2 * cfg.n_max + 1; ++n) mom.residual(n, moment_scaling_residual(n, z), ctx);
    for (int n = 0; n <= cfg.n_max; ++n) {
      const auto [ea, eb] = scaling_check(b.tbl, one.tbl, n);
      coef.value(n, max(abs(ea), abs(eb)), ctx.verify_tol(Real(1)));
      const Real s1 = one.polys[static_cast<size_t>(n)].sigma();
      sg.value(n, b.polys[static_cast<size_t>(n)].sigma() * z4 - s1, ctx.verify_tol(abs(s1)));
      if (n >= 1) {
        const HScaling h = h_scaling_check(z, n, ctx);
        hs.value(n, h.integrated, ctx.verify_tol(Real(1)));
        // Central differences: truncation O(step^2), step = z 2^{-bits/4}.
        hd.value(n, h.derivative_h2, Real(2 * n + 1) * ldexp(Real(1), -ctx.bits() / 4));
        const Residual zr = zero_scaling_check(n, z, ctx);
        zs.value(n, zr.value, ctx.verify_tol(zr.scale));
        if (zd == 16.0) z16.value(n, zr.value, Real(1e-12) * zr.scale);
      }
    }
  }
  for (Acc* a : {&mom, &coef, &hs, &hd, &sg, &sgb, &zs, &z16}) a->commit(rep);
}

void check_zeros(const SuiteConfig& cfg, VerificationReport& rep) {
  Acc res("zero-residual", cfg.z_values), il("interlacing", cfg.z_values), ode("zeros-ode", cfg.z_values);
  Acc sta("stationarity", cfg.z_values), fd("gradient-fd-order", cfg.z_values), bd("largest-zero-bound", cfg.z_values);
  Acc sym("symmetrization", cfg.z_values);
  for (double zd : cfg.z_values) {
    const Built b = build(cfg, zd);
    auto scope = b.ctx.scope();
    const std::vector<Real> gammas = gamma_chain(b.polys, b.tbl, cfg.n_max);
    std::optional<ZeroSet> prev;
    for (int n = 1; n <= cfg.n_max; ++n) {
      const ZeroSet zset = zeros(b.tbl, n);
      res.residual(n, zero_residual(b.tbl, zset), b.ctx);
      if (prev) il.flag(n, interlaces(zset, *prev));
      ode.residual(n, zeros_ode_check(b.tbl, b.polys, zset), b.ctx);
      const Stationarity s = stationarity_check(zset.x, n, b.tbl, b.polys, Real(1e-3));
      sta.value(n, s.ratio(), Real(1e-8));
      if (n >= 2) {
        // Halving h must cut the error by about 4.
        const Real e1 = gradient_fd_error(zset.x, n, b.tbl, b.polys, Real(1e-6));
        const Real e2 = gradient_fd_error(zset.x, n, b.tbl, b.polys, Real(5e-7));
        fd.value(n, e1 / e2 - 4, Real(0.5));
        bd.flag(n, zset.largest() < largest_zero_bound(b.polys, b.tbl, n, Real(cfg.epsilon)));
      }
      sym.residual(n, symmetrization_check(b.polys, gammas, n), b.ctx);
      prev = zset;
    }
  }
  for (Acc* a : {&res, &il, &ode, &sta, &fd, &bd, &sym}) a->commit(rep);
}

void check_density(const SuiteConfig& cfg, VerificationReport& rep) {
  PrecisionScope scope(128);
  const DensityModel m{Real(cfg.t)};
  Acc norm("density-normalization", {cfg.t}), rep_agree("density-representations", {cfg.t});
  norm.value(0, m.normalization() - 1, Real(1e-6));
  for (int i = 1; i <= 18; ++i) {
    const Real w = Real(i) / 20;  // 0.05 .. 0.9
    const Real x = w * m.beta_t;
    const Real s = m.series(x);
    rep_agree.value(i, (s - m.integral(x)) / s, Real(1e-8));
  }
  norm.commit(rep);
  rep_agree.commit(rep);
}

void check_self_consistency(const SuiteConfig& cfg, VerificationReport& rep) {
  SuiteConfig twice = cfg;
  twice.bits = 2 * suite_bits(cfg, cfg.n_max + kHeadroom);
  if (twice.guard_bits) twice.guard_bits = 2 * *twice.guard_bits;
  VerificationReport base, doubled;
  check_laguerre_freud(cfg, base);
  check_operators(cfg, base);
  check_laguerre_freud(twice, doubled);
  check_operators(twice, doubled);
  Acc verdicts("self-consistency-verdicts", cfg.z_values);
  for (size_t i = 0; i < base.records.size(); ++i) {
    verdicts.flag(static_cast<int>(i), base.records[i].pass == doubled.records[i].pass);
  }
  verdicts.commit(rep);

  Acc rounded("self-consistency-zeros", cfg.z_values);
  for (double zd : cfg.z_values) {
    const Built lo = build(cfg, zd);
    const Built hi = build(twice, zd);
    for (int n = 1; n <= cfg.n_max; ++n) {
      std::string a, b;
      {
        auto s = lo.ctx.scope();
        for (const auto& x : zeros(lo.tbl, n).x) a += x.to_fixed(4) + ",";
      }
      {
        auto s = hi.ctx.scope();
        for (const auto& x : zeros(hi.tbl, n).x) b += x.to_fixed(4) + ",";
      }
      rounded.flag(n, a == b);
    }
  }
  rounded.commit(rep);
}

VerificationReport run_verification(const SuiteConfig& cfg) {
  if (cfg.z_values.empty()) throw DomainError("verification: no z values");
  for (double z : cfg.z_values) {
    if (!(z > 0)) throw DomainError("verification: z must be positive");
  }
  if (cfg.n_max < 1) throw DomainError("verification: n_max must be at least 1");
  VerificationReport rep;
  check_moments(cfg, rep);
  check_laguerre_freud(cfg, rep);
  check_operators(cfg, rep);
  check_scaling(cfg, rep);
  check_zeros(cfg, rep);
  check_density(cfg, rep);
  if (cfg.self_consistency) check_self_consistency(cfg, rep);
  {
    Acc c("asymptotic-constants", {});
    c.flag(0, asymptotic_constants_check().all());
    c.commit(rep);
  }
  return rep;
}

}  // namespace tfreud
