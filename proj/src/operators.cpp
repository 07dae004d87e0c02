#include "tfreud/operators.hpp"

#include <string>

#include "tfreud/errors.hpp"

namespace tfreud {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw IndexError(what);
}

Tracked z4(const RecurrenceTable& tbl) { return 4 * Tracked::input(tbl.z()); }

TrackedPoly tp(const std::vector<MonicPoly>& polys, int k) {
  if (k < 0) return TrackedPoly{};
  return TrackedPoly::input(polys[static_cast<size_t>(k)].poly());
}

TrackedPoly tconst(const Tracked& c) { return TrackedPoly::constant(c); }

// x - c as a tracked polynomial.
TrackedPoly x_minus(const Tracked& c) { return {Poly({-c.value, Real(1)}), Poly({c.scale})}; }

const TrackedPoly& tx() {
  static thread_local TrackedPoly x = TrackedPoly::exact(Poly::monomial(1));
  return x;
}

Residual sampled(const TrackedPoly& p, const std::vector<Real>& xs) {
  Residual worst{Real(0), Real(0)};
  for (const auto& x : xs) worst = worse(worst, Residual::of(p.eval(x)));
  return worst;
}

using TMatrix = std::vector<std::vector<Tracked>>;

TMatrix zeros_matrix(int m) {
  return TMatrix(static_cast<size_t>(m), std::vector<Tracked>(static_cast<size_t>(m), Tracked::exact(Real(0))));
}

TMatrix matmul(const TMatrix& a, const TMatrix& b) {
  const size_t m = a.size();
  TMatrix c = zeros_matrix(static_cast<int>(m));
  for (size_t i = 0; i < m; ++i) {
    for (size_t k = 0; k < m; ++k) {
      if (a[i][k].value.is_zero() && a[i][k].scale.is_zero()) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
    }
  }
  return c;
}

// Truncated monic Jacobi matrix: x P = J P.
TMatrix jacobi(const RecurrenceTable& tbl, int m) {
  TMatrix j = zeros_matrix(m);
  for (int k = 0; k < m; ++k) {
    const auto i = static_cast<size_t>(k);
    j[i][i] = tbl.tb(k);
    if (k + 1 < m) j[i][i + 1] = Tracked::exact(Real(1));
    if (k > 0) j[i][i - 1] = tbl.ta(k);
  }
  return j;
}

}  // namespace

std::vector<MonicPoly> poly_table(const RecurrenceTable& tbl) {
  std::vector<MonicPoly> out;
  out.reserve(static_cast<size_t>(tbl.n_max()) + 1);
  Poly prev;  // P_{-1} = 0
  Poly cur = Poly::constant(Real(1));
  out.emplace_back(cur);
  for (int k = 0; k < tbl.n_max(); ++k) {
    Poly next = Poly::monomial(1) * cur - tbl.b(k) * cur - tbl.a(k) * prev;
    prev = std::move(cur);
    cur = std::move(next);
    out.emplace_back(cur);
  }
  return out;
}

Tracked poly_at_zero(const std::vector<MonicPoly>& polys, int k) {
  if (k < 0) return Tracked::exact(Real(0));
  require(k < static_cast<int>(polys.size()), "polynomial index " + std::to_string(k) + " not in table");
  return Tracked::input(polys[static_cast<size_t>(k)].at_zero());
}

Tracked beta(const RecurrenceTable& tbl, int n, int k) {
  require(n >= 0 && k >= n - 4 && k <= n + 3, "beta index out of range");
  const auto a = [&](int i) { return tbl.ta(i); };
  const auto b = [&](int i) { return tbl.tb(i); };
  const auto R = [&](int i) { return tbl.tR(i); };
  const auto T = [&](int i) { return tbl.tT(i); };
  const auto s = [&](int i) { return b(i + 1) + b(i); };
  switch (k - n) {
    case 3: return b(n) + b(n + 1) + b(n + 2) + b(n + 3);
    case 2: return R(n + 2) + s(n) * s(n + 1) + R(n);
    case 1: return T(n + 2) + s(n) * (R(n + 1) + R(n)) + T(n);
    case 0: return a(n + 2) * a(n + 1) + s(n) * T(n + 1) + R(n) * R(n) + s(n - 1) * T(n) + a(n) * a(n - 1);
    case -1: return s(n) * a(n + 1) * a(n) + T(n) * (R(n) + R(n - 1)) + a(n) * a(n - 1) * (b(n - 1) + b(n - 2));
    case -2: return a(n) * a(n - 1) * (R(n) + R(n - 2)) + T(n) * T(n - 1);
    case -3: return a(n - 1) * a(n - 2) * T(n) + a(n) * a(n - 1) * T(n - 2);
    default: return a(n) * a(n - 1) * a(n - 2) * a(n - 3);
  }
}

BetaRow beta_row(const RecurrenceTable& tbl, int n) {
  require(n >= 0 && n + 3 <= tbl.n_max(), "beta_row: need 0 <= n <= n_max - 3");
  BetaRow row{n, {}};
  for (int k = n - 4; k <= n + 3; ++k) row.coeff[static_cast<size_t>(k - n + 4)] = beta(tbl, n, k);
  return row;
}

Residual j4_row_residual(const RecurrenceTable& tbl, int n) {
  require(n >= 0 && n + 4 <= tbl.n_max(), "j4_row_residual: need n + 4 <= n_max");
  const int m = n + 5;
  const TMatrix j = jacobi(tbl, m);
  const TMatrix j2 = matmul(j, j);
  const TMatrix j4 = matmul(j2, j2);
  const BetaRow row = beta_row(tbl, n);
  const auto& r = j4[static_cast<size_t>(n)];
  Residual worst = Residual::between(r[static_cast<size_t>(n + 4)], Tracked::exact(Real(1)));
  for (int k = std::max(0, n - 4); k <= n + 3; ++k) {
    worst = worse(worst, Residual::between(r[static_cast<size_t>(k)], row.at(k)));
  }
  // Entries below column 0 must come from vanishing products of a_0.
  for (int k = n - 4; k < 0; ++k) worst = worse(worst, Residual::of(row.at(k)));
  return worst;
}

TrackedPoly structure_residual(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys, int n) {
  require(n >= 0 && n + 2 <= tbl.n_max(), "structure_residual: need n + 2 <= n_max");
  const TrackedPoly p1 = tp(polys, n + 1);
  TrackedPoly rhs = tconst(Tracked::exact(Real(n + 1))) * p1;
  for (int k = n - 3; k <= n; ++k) rhs = rhs + (z4(tbl) * beta(tbl, n + 1, k)) * tp(polys, k);
  return tx() * diff(p1) - rhs;
}

namespace {

// Structure coefficients alpha_{n+1,k}, k = n, n-1, n-2, n-3, in the a, b, R, T form.
std::array<Tracked, 4> alpha_explicit(const RecurrenceTable& tbl, int n) {
  const Tracked c = z4(tbl);
  const auto a = [&](int i) { return tbl.ta(i); };
  const auto R = [&](int i) { return tbl.tR(i); };
  const auto T = [&](int i) { return tbl.tT(i); };
  return {c * (a(n + 1) * (T(n + 2) + T(n)) + T(n + 1) * (R(n + 1) + R(n))),
          c * (a(n + 1) * a(n) * (R(n + 1) + R(n - 1)) + T(n + 1) * T(n)),
          c * a(n) * (a(n - 1) * T(n + 1) + a(n + 1) * T(n - 1)),
          c * a(n + 1) * a(n) * a(n - 1) * a(n - 2)};
}

}  // namespace

TrackedPoly structure_residual_explicit(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys, int n) {
  require(n >= 0 && n + 2 <= tbl.n_max(), "structure_residual: need n + 2 <= n_max");
  const auto alpha = alpha_explicit(tbl, n);
  const TrackedPoly p1 = tp(polys, n + 1);
  TrackedPoly rhs = tconst(Tracked::exact(Real(n + 1))) * p1;
  for (int i = 0; i < 4; ++i) rhs = rhs + alpha[static_cast<size_t>(i)] * tp(polys, n - i);
  return tx() * diff(p1) - rhs;
}

Residual structure_coeff_agreement(const RecurrenceTable& tbl, int n) {
  require(n >= 0 && n + 2 <= tbl.n_max(), "structure_coeff_agreement: need n + 2 <= n_max");
  const auto alpha = alpha_explicit(tbl, n);
  Residual worst{Real(0), Real(0)};
  for (int i = 0; i < 4; ++i) {
    worst = worse(worst, Residual::between(alpha[static_cast<size_t>(i)], z4(tbl) * beta(tbl, n + 1, n - i)));
  }
  return worst;
}

LadderPair ladder_pair(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys, int n) {
  require(n >= 0 && n + 1 <= tbl.n_max(), "ladder_pair: need n + 1 <= n_max");
  const Tracked c = z4(tbl);
  const Tracked pn0 = poly_at_zero(polys, n);
  const TrackedPoly x = tx();
  // 4z x (x^2 + b_n x + R_n) + P_n(0)^2 / h_n
  const TrackedPoly quad = x * x + tbl.tb(n) * x + tconst(tbl.tR(n));
  const TrackedPoly xA = c * (x * quad) + tconst(pn0 * pn0 / Tracked::input(tbl.h(n)));
  TrackedPoly xB = (c * tbl.ta(n)) * (x * (x + tconst(tbl.tb(n) + tbl.tb(n - 1))));
  if (n >= 1) xB = xB + tconst(pn0 * poly_at_zero(polys, n - 1) / Tracked::input(tbl.h(n - 1)));
  const TrackedPoly den = x;
  return {n, xA, xB, RationalFn(xA, den), RationalFn(xB, den)};
}

Residual identity_i(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys, int n) {
  require(n >= 0 && n + 1 <= tbl.n_max(), "identity_i: need n + 1 <= n_max");
  const Tracked lhs = z4(tbl) * (tbl.tT(n + 1) + tbl.tb(n) * tbl.tR(n) + tbl.tT(n));
  const Tracked p0 = poly_at_zero(polys, n);
  return Residual::between(lhs, p0 * p0 / Tracked::input(tbl.h(n)));
}

Residual identity_ii(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys, int n) {
  require(n >= 0 && n + 2 <= tbl.n_max(), "identity_ii: need n + 2 <= n_max");
  const Tracked lhs = z4(tbl) * (tbl.ta(n + 1) * tbl.tR(n + 1) - tbl.ta(n) * tbl.tR(n - 1) +
                                 tbl.tb(n) * (tbl.tT(n + 1) - tbl.tT(n)));
  const Tracked inner = poly_at_zero(polys, n + 1) - tbl.ta(n) * poly_at_zero(polys, n - 1);
  const Tracked rhs = Tracked::exact(Real(1)) + poly_at_zero(polys, n) * inner / Tracked::input(tbl.h(n));
  return Residual::between(lhs, rhs);
}

std::pair<Residual, Residual> compat_residuals(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys,
                                               int n, const std::vector<Real>& x_samples) {
  require(n >= 0 && n + 2 <= tbl.n_max(), "compat_residuals: need n + 2 <= n_max");
  const LadderPair lm = n >= 1 ? ladder_pair(tbl, polys, n - 1) : ladder_pair(tbl, polys, 0);
  const LadderPair l0 = ladder_pair(tbl, polys, n);
  const LadderPair l1 = ladder_pair(tbl, polys, n + 1);
  Residual r1{Real(0), Real(0)}, r2{Real(0), Real(0)};
  for (const auto& xv : x_samples) {
    if (xv.is_zero()) throw DomainError("compat_residuals: sample at the pole x = 0");
    const Tracked x = Tracked::exact(xv);
    const Tracked vp = z4(tbl) * x * x * x;
    const Tracked xb = x - tbl.tb(n);
    const Tracked A0 = l0.A.eval(xv);
    const Tracked B0 = l0.B.eval(xv);
    const Tracked A1 = l1.A.eval(xv);
    const Tracked B1 = l1.B.eval(xv);
    r1 = worse(r1, Residual::between(B1 + B0, xb * A0 - vp));
    const Tracked Am = n >= 1 ? lm.A.eval(xv) : Tracked::exact(Real(0));
    r2 = worse(r2, Residual::between(tbl.ta(n + 1) * A1 - tbl.ta(n) * Am,
                                     Tracked::exact(Real(1)) + xb * (B1 - B0)));
  }
  return {r1, r2};
}

LoweringData lowering_data(const RecurrenceTable& tbl, int n) {
  require(n >= 0 && n + 2 <= tbl.n_max(), "lowering_data: need 0 <= n <= n_max - 2");
  const Tracked c = z4(tbl);
  const auto a = [&](int i) { return tbl.ta(i); };
  const auto b = [&](int i) { return tbl.tb(i); };
  const auto R = [&](int i) { return tbl.tR(i); };
  const auto T = [&](int i) { return tbl.tT(i); };

  // alpha_{n+1,n-k} divided by the products of a that come from
  // eliminating P_{n-1}, P_{n-2}, P_{n-3} through the recurrence; the
  // quotients T_k / a_k = b_k + b_{k-1} leave no division behind.
  const Tracked g0 = c * (a(n + 1) * (T(n + 2) + T(n)) + T(n + 1) * (R(n + 1) + R(n)));
  const Tracked g1 = c * (a(n + 1) * (R(n + 1) + R(n - 1)) + T(n + 1) * (b(n) + b(n - 1)));
  const Tracked g2 = c * (T(n + 1) + a(n + 1) * (b(n - 1) + b(n - 2)));
  const Tracked g3 = c * a(n + 1);

  const TrackedPoly e0 = x_minus(b(n));
  const TrackedPoly e1 = x_minus(b(n - 1));
  const TrackedPoly e2 = x_minus(b(n - 2));
  const TrackedPoly q2 = e1 * e0 - tconst(a(n));

  TrackedPoly C = tconst(g0) + g1 * e0 + g2 * q2 + g3 * (e2 * q2 - a(n - 1) * e0);
  TrackedPoly D = tconst(Tracked::exact(Real(-(n + 1))) + g1) + g2 * e1 + g3 * (e2 * e1 - tconst(a(n - 1)));
  const TrackedPoly x = tx();
  return {n, C, D, RationalFn(x, C), RationalFn(D, C)};
}

Residual lowering_beta_route(const RecurrenceTable& tbl, const LoweringData& data, const std::vector<Real>& x_samples) {
  const int n = data.n;
  require(n >= 3, "lowering_beta_route: needs n >= 3 (divides by a_{n-2})");
  const Tracked c = z4(tbl);
  const Tracked an = tbl.ta(n), an1 = tbl.ta(n - 1), an2 = tbl.ta(n - 2);
  const TrackedPoly e0 = x_minus(tbl.tb(n));
  const TrackedPoly e1 = x_minus(tbl.tb(n - 1));
  const TrackedPoly e2 = x_minus(tbl.tb(n - 2));
  const TrackedPoly q2 = e1 * e0 - tconst(an);
  const TrackedPoly q3 = e2 * q2 - an1 * e0;
  const TrackedPoly route = c * (tconst(beta(tbl, n + 1, n)) + (beta(tbl, n + 1, n - 1) / an) * e0 +
                                 (beta(tbl, n + 1, n - 2) / (an * an1)) * q2 +
                                 (beta(tbl, n + 1, n - 3) / (an * an1 * an2)) * q3);
  return sampled(route - data.C, x_samples);
}

TrackedPoly lowering_apply(const std::vector<MonicPoly>& polys, const LoweringData& data) {
  const int n = data.n;
  require(n + 1 < static_cast<int>(polys.size()), "lowering_apply: P_{n+1} not in table");
  const TrackedPoly p1 = tp(polys, n + 1);
  return tx() * diff(p1) + data.D * p1 - data.C * tp(polys, n);
}

TrackedPoly raising_apply(const std::vector<MonicPoly>& polys, const LoweringData& data, const RecurrenceTable& tbl) {
  const int n = data.n;
  require(n + 2 < static_cast<int>(polys.size()), "raising_apply: P_{n+2} not in table");
  const TrackedPoly p1 = tp(polys, n + 1);
  const TrackedPoly lowered = tx() * diff(p1) + data.D * p1;
  return (-tbl.ta(n + 1)) * lowered + x_minus(tbl.tb(n + 1)) * data.C * p1 - data.C * tp(polys, n + 2);
}

TrackedPoly holonomic_poly_Dn(const std::vector<MonicPoly>& polys, const RecurrenceTable& tbl, int n) {
  require(n >= 1, "holonomic_poly_Dn: needs n >= 1");
  const LoweringData cur = lowering_data(tbl, n);
  const LoweringData prev = lowering_data(tbl, n - 1);
  const TrackedPoly& C = cur.C;
  const TrackedPoly& D = cur.D;
  const TrackedPoly x = tx();
  const Tracked an = tbl.ta(n);
  // a_n B_{n-1} - x + b_n, times C_{n-1}
  const TrackedPoly shift = an * prev.D - x_minus(tbl.tb(n)) * prev.C;
  const TrackedPoly p = tp(polys, n + 1);
  const TrackedPoly dp = diff(p);
  const TrackedPoly ddp = diff(dp);
  const TrackedPoly dC = diff(C);
  const TrackedPoly c2 = an * (x * x * C);
  const TrackedPoly c1 = x * C * shift + an * (x * (C - x * dC + D * C));
  const TrackedPoly c0 = an * (x * (diff(D) * C - D * dC)) + D * C * shift + C * C * prev.C;
  return c2 * ddp + c1 * dp + c0 * p;
}

Residual holonomic_residual_Dn(const std::vector<MonicPoly>& polys, const RecurrenceTable& tbl, int n,
                               const std::vector<Real>& x_samples) {
  return sampled(holonomic_poly_Dn(polys, tbl, n), x_samples);
}

TrackedPoly holonomic_poly_chen(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys, int n) {
  require(n >= 1 && n + 1 <= tbl.n_max(), "holonomic_poly_chen: need 1 <= n <= n_max - 1");
  const LadderPair cur = ladder_pair(tbl, polys, n);
  const LadderPair prev = ladder_pair(tbl, polys, n - 1);
  const TrackedPoly& al = cur.xA;   // x A_n
  const TrackedPoly& be = cur.xB;   // x B_n
  const TrackedPoly& alm = prev.xA; // x A_{n-1}
  const TrackedPoly x = tx();
  const TrackedPoly vp = z4(tbl) * (x * x * x);
  const TrackedPoly dal = diff(al);
  const TrackedPoly p = tp(polys, n);
  const TrackedPoly dp = diff(p);
  const TrackedPoly ddp = diff(dp);
  const TrackedPoly c2 = x * x * al;
  const TrackedPoly c1 = x * al - x * x * (vp * al + dal);
  const TrackedPoly c0 = x * (al * diff(be) - be * dal - al * be * vp) - al * be * be +
                         tbl.ta(n) * (al * al * alm);
  return c2 * ddp + c1 * dp + c0 * p;
}

Residual holonomic_residual_chen(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys, int n,
                                 const std::vector<Real>& x_samples) {
  return sampled(holonomic_poly_chen(tbl, polys, n), x_samples);
}

Residual confluent_check(const std::vector<MonicPoly>& polys, const RecurrenceTable& tbl, int n,
                         const std::vector<Real>& x_samples) {
  require(n >= 0 && n + 1 < static_cast<int>(polys.size()) && n <= tbl.n_max(), "confluent_check: need P_{n+1}");
  Residual worst{Real(0), Real(0)};
  const TrackedPoly p0 = tp(polys, n), p1 = tp(polys, n + 1);
  const TrackedPoly num = diff(p1) * p0 - diff(p0) * p1;
  for (const auto& xv : x_samples) {
    Tracked sum = Tracked::exact(Real(0));
    for (int k = 0; k <= n; ++k) {
      const Tracked pk = tp(polys, k).eval(xv);
      sum = sum + pk * pk / Tracked::input(tbl.h(k));
    }
    const Tracked rhs = num.eval(xv) / Tracked::input(tbl.h(n));
    // Relative: both sides are positive.
    const Residual r = Residual::between(sum, rhs);
    worst = worse(worst, Residual{r.value / sum.value, r.scale / sum.value});
  }
  return worst;
}

Residual lax_block_check(const RecurrenceTable& tbl, int M) {
  require(M >= 10, "lax_block_check: M must be at least 10");
  require(M <= tbl.n_max() + 1, "lax_block_check: M exceeds the table");
  const TMatrix j = jacobi(tbl, M);
  const TMatrix j2 = matmul(j, j);
  const TMatrix j4 = matmul(j2, j2);
  TMatrix l = zeros_matrix(M);
  const Tracked c = z4(tbl);
  for (int r = 0; r < M; ++r) {
    const auto i = static_cast<size_t>(r);
    for (int col = 0; col < r; ++col) l[i][static_cast<size_t>(col)] = c * j4[i][static_cast<size_t>(col)];
    l[i][i] = Tracked::exact(Real(r));
  }
  const TMatrix jl = matmul(j, l);
  const TMatrix lj = matmul(l, j);
  Residual worst{Real(0), Real(0)};
  for (int r = 0; r <= M - 6; ++r) {
    const auto i = static_cast<size_t>(r);
    for (size_t col = 0; col < static_cast<size_t>(M); ++col) {
      worst = worse(worst, Residual::of(jl[i][col] - lj[i][col] - j[i][col]));
    }
  }
  return worst;
}

std::vector<Real> sample_grid(int n, const Real& z) {
  const Real lo = Real(1) / 100;
  const Real hi = 4 * root(Real(std::max(n, 1)) / (140 * z), 4) + 1;
  const Real ratio = hi / lo;
  std::vector<Real> xs;
  xs.reserve(16);
  for (int i = 1; i <= 16; ++i) xs.push_back(lo * pow(ratio, Real(i) / 17));
  return xs;
}

}  // namespace tfreud
