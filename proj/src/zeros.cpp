#include "tfreud/zeros.hpp"

#include <algorithm>
#include <string>

#include "tfreud/errors.hpp"
#include "tfreud/operators.hpp"
#include "tfreud/special.hpp"
#include "tfreud/tridiag.hpp"

namespace tfreud {

ZeroSet zeros(const RecurrenceTable& tbl, int n) {
  if (n < 1 || n > tbl.n_max()) {
    throw IndexError("zeros: degree " + std::to_string(n) + " outside 1.." + std::to_string(tbl.n_max()));
  }
  std::vector<Real> diag(tbl.b_values().begin(), tbl.b_values().begin() + n);
  std::vector<Real> off_sq(tbl.a_values().begin() + 1, tbl.a_values().begin() + n);
  return {n, tbl.z(), tridiag_eigenvalues_sq(diag, off_sq)};
}

Tracked eval_ttrr(const RecurrenceTable& tbl, int n, const Real& x) {
  Tracked prev = Tracked::exact(Real(0));
  Tracked cur = Tracked::exact(Real(1));
  const Tracked tx = Tracked::exact(x);
  for (int k = 0; k < n; ++k) {
    Tracked next = (tx - tbl.tb(k)) * cur - tbl.ta(k) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Residual zero_residual(const RecurrenceTable& tbl, const ZeroSet& zs) {
  Residual worst{Real(0), Real(0)};
  for (const auto& x : zs.x) worst = worse(worst, Residual::of(eval_ttrr(tbl, zs.n, x)));
  return worst;
}

bool interlaces(const ZeroSet& outer, const ZeroSet& inner) {
  if (inner.n + 1 != outer.n) return false;
  for (int k = 0; k < inner.n; ++k) {
    const auto i = static_cast<size_t>(k);
    if (!(outer.x[i] < inner.x[i] && inner.x[i] < outer.x[i + 1])) return false;
  }
  return true;
}

Residual zero_scaling_check(int n, const Real& z, const PrecisionContext& ctx) {
  auto scope = ctx.scope();
  const ZeroSet base = zeros(chebyshev_coeffs(Real(1), n, ctx), n);
  const ZeroSet scaled = zeros(chebyshev_coeffs(z, n, ctx), n);
  const Real f = root(z, 4);
  Real worst(0);
  for (size_t k = 0; k < base.x.size(); ++k) worst = max(worst, abs(scaled.x[k] * f - base.x[k]));
  return {worst, base.largest()};
}

std::vector<Real> gamma_chain(const std::vector<MonicPoly>& polys, const RecurrenceTable& tbl, int n_max) {
  if (n_max < 1 || n_max >= static_cast<int>(polys.size()) || n_max > tbl.n_max()) {
    throw IndexError("gamma_chain: n_max outside the polynomial table");
  }
  auto p0 = [&](int k) {
    const Real v = polys[static_cast<size_t>(k)].at_zero();
    if (v.is_zero()) throw ContractViolation("gamma_chain: P_" + std::to_string(k) + "(0) vanishes");
    return v;
  };
  std::vector<Real> g(static_cast<size_t>(2 * n_max - 1));
  for (int i = 1; i <= 2 * n_max - 1; ++i) {
    const int k = i / 2;
    Real v = i % 2 == 1 ? -p0(k + 1) / p0(k) : -tbl.a(k) * p0(k - 1) / p0(k);
    if (!(v > 0)) throw ContractViolation("gamma_chain: gamma_" + std::to_string(i) + " is not positive");
    g[static_cast<size_t>(i - 1)] = std::move(v);
  }
  return g;
}

Residual symmetrization_check(const std::vector<MonicPoly>& polys, const std::vector<Real>& gammas, int n) {
  if (n < 1 || static_cast<int>(gammas.size()) < 2 * n - 1 || n >= static_cast<int>(polys.size())) {
    throw IndexError("symmetrization_check: not enough data for degree " + std::to_string(n));
  }
  TrackedPoly prev = TrackedPoly::exact(Poly::constant(Real(1)));
  TrackedPoly cur = TrackedPoly::exact(Poly::monomial(1));
  const TrackedPoly x = TrackedPoly::exact(Poly::monomial(1));
  for (int k = 1; k < 2 * n; ++k) {
    TrackedPoly next = x * cur - Tracked::input(gammas[static_cast<size_t>(k - 1)]) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  // P_n(x^2) spread onto even powers.
  const Poly& p = polys[static_cast<size_t>(n)].poly();
  std::vector<Real> spread(static_cast<size_t>(2 * n) + 1, Real(0));
  for (int j = 0; j <= n; ++j) spread[static_cast<size_t>(2 * j)] = p.coeff(j);
  return (cur - TrackedPoly::input(Poly(std::move(spread)))).worst_coefficient();
}

Real largest_zero_bound(const std::vector<MonicPoly>& polys, const RecurrenceTable& tbl, int n, const Real& eps) {
  if (n < 2) throw IndexError("largest_zero_bound: needs n >= 2");
  if (!(eps > 0)) throw DomainError("largest_zero_bound: epsilon must be positive");
  const std::vector<Real> g = gamma_chain(polys, tbl, n);
  const Real cs = cos(pi() / (2 * n + 1));
  const Real c2n = 4 * cs * cs + eps;
  Real best(0);
  for (const auto& v : g) best = max(best, c2n * v);
  return best;
}

Residual zeros_ode_check(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys, const ZeroSet& zs) {
  const int n = zs.n;
  const LadderPair lp = ladder_pair(tbl, polys, n);
  const TrackedPoly p = TrackedPoly::input(polys[static_cast<size_t>(n)].poly());
  const TrackedPoly dp = diff(p);
  const TrackedPoly ddp = diff(dp);
  const TrackedPoly dal = diff(lp.xA);
  Residual worst{Real(0), Real(0)};
  for (const auto& xv : zs.x) {
    const Tracked x = Tracked::exact(xv);
    const Tracked lhs = ddp.eval(xv) / dp.eval(xv);
    const Tracked rhs = 4 * Tracked::input(tbl.z()) * x * x * x + dal.eval(xv) / lp.xA.eval(xv) -
                        Tracked::exact(Real(1)) / x;
    worst = worse(worst, Residual::between(lhs, rhs));
  }
  return worst;
}

DensityModel::DensityModel(const Real& tt) : t(tt) {
  if (!(t > 0)) throw DomainError("density: t must be positive");
  c = 1 / root(Real(140), 4);
  beta_t = 4 * c * root(t, 4);
}

Real DensityModel::series(const Real& x) const {
  if (!(x > 0 && x < beta_t)) throw DomainError("density: x outside the support");
  const Real pref = Real(4) / (7 * pi()) / (sqrt(x) * root(t, 8) * sqrt(c));
  return pref * hyp2f1_series(Real(1) / 2, Real(-7) / 2, Real(-5) / 2, w(x));
}

Real DensityModel::integral(const Real& x) const {
  if (!(x > 0 && x < beta_t)) throw DomainError("density: x outside the support");
  // s = u^4 and u = u0 + (u1 - u0) v^2 take both endpoint singularities out.
  const Real u0 = x / (4 * c);
  const Real u1 = root(t, 4);
  const Real du = u1 - u0;
  const Real sx = sqrt(x);
  auto f = [&](const Real& v) {
    const Real u = u0 + du * v * v;
    const Real jac = 4 * u * u * u * 2 * du * v;  // ds/dv
    const Real gap = 4 * c * du * v * v;            // 4c s^{1/4} - x
    return jac / (sqrt(gap) * sx);
  };
  const Real tol = ldexp(Real(1), -static_cast<long>(working_precision()) / 2);
  return integrate(f, Real(0), Real(1), tol) / (pi() * t);
}

Real DensityModel::operator()(const Real& x) const {
  if (!(x > 0 && x < beta_t)) throw DomainError("density: x outside the support (0, " + beta_t.to_string(8) + ")");
  if (w(x) < Real(95) / 100) return series(x);
  return integral(x);
}

Real DensityModel::cdf(const Real& y) const {
  if (!(y > 0)) return Real(0);
  if (y >= beta_t) return normalization();
  // x = y s^2 removes the x^{-1/2} singularity at the origin.
  auto f = [&](const Real& s) { return (*this)(y * s * s) * 2 * y * s; };
  const Real tol = ldexp(Real(1), -static_cast<long>(working_precision()) / 2);
  return integrate(f, Real(0), Real(1), tol);
}

Real DensityModel::normalization() const {
  auto f = [&](const Real& u) { return (*this)(beta_t * u * u) * 2 * beta_t * u; };
  const Real tol = ldexp(Real(1), -static_cast<long>(working_precision()) / 2);
  return integrate(f, Real(0), Real(1), tol);
}

Real density(const Real& x, const Real& t) { return DensityModel(t)(x); }

Real empirical_density_distance(int n, int N, const Real& t) {
  if (n < 1 || N < 1) throw DomainError("empirical_density_distance: n and N must be positive");
  std::vector<Real> xs;
  {
    const PrecisionContext ctx = PrecisionContext::for_degree(n);
    auto scope = ctx.scope();
    const RecurrenceTable tbl = chebyshev_coeffs(Real(1), n, ctx).rounded(128);
    PrecisionScope low(128);
    xs = zeros(tbl, n).x;
  }
  PrecisionScope low(96);
  const DensityModel model(t);
  const Real scale = root(Real(N), 4);
  Real dist(0);
  for (int k = 0; k < n; ++k) {
    const Real F = model.cdf(xs[static_cast<size_t>(k)].rounded(96) / scale);
    dist = max(dist, abs(Real(k + 1) / n - F));
    dist = max(dist, abs(F - Real(k) / n));
  }
  return dist;
}

ChebyshevComparison chebyshev_comparison(int n) {
  if (n < 1) throw DomainError("chebyshev_comparison: n must be positive");
  ChebyshevComparison out;
  out.n = n;
  out.beta = 2 / root(Real(140), 4);
  for (int k = 1; k <= n; ++k) out.closed_form.push_back(out.beta * (cos(Real(n - k + 1) * pi() / (n + 1)) + 1));
  std::vector<Real> diag(static_cast<size_t>(n), out.beta);
  std::vector<Real> off(static_cast<size_t>(n - 1), out.beta / 2);
  out.eigen = tridiag_eigenvalues(diag, off);
  out.max_diff = Real(0);
  for (int k = 0; k < n; ++k) {
    out.max_diff = max(out.max_diff, abs(out.closed_form[static_cast<size_t>(k)] - out.eigen[static_cast<size_t>(k)]));
  }
  const Real pi2 = pi() * pi();
  out.w = out.beta * pi2 / (2 * Real(n + 1) * (n + 1));
  out.y1_over_w = out.closed_form.front() / out.w;
  return out;
}

std::vector<Real> ptilde_zeros(int n) {
  if (n < 1) throw DomainError("ptilde_zeros: n must be positive");
  const Real beta = 2 / root(Real(140), 4);
  std::vector<Real> diag, off_sq;
  for (int k = 0; k < n; ++k) diag.push_back(k == 0 ? Real(0) : root(Real(k), 4) * beta);
  for (int k = 1; k < n; ++k) off_sq.push_back(sqrt(Real(k)) * beta * beta / 4);
  return tridiag_eigenvalues_sq(diag, off_sq);
}

}  // namespace tfreud
