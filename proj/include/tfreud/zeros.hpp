#ifndef TFREUD_ZEROS_HPP
#define TFREUD_ZEROS_HPP

#include <vector>

#include "tfreud/polynomial.hpp"
#include "tfreud/precision.hpp"
#include "tfreud/recurrence.hpp"
#include "tfreud/tracked.hpp"

namespace tfreud {

/// Zeros x_{n,1} < ... < x_{n,n} of P_n.
struct ZeroSet {
  int n = 0;
  Real z;
  std::vector<Real> x;

  const Real& smallest() const { return x.front(); }
  const Real& largest() const { return x.back(); }
};

/// Eigenvalues of the n x n Jacobi truncation (diagonal b_0..b_{n-1},
/// squared off-diagonal a_1..a_{n-1}), at the working precision.
ZeroSet zeros(const RecurrenceTable& tbl, int n);

/// P_n(x) by the recurrence, with its rounding scale.
Tracked eval_ttrr(const RecurrenceTable& tbl, int n, const Real& x);

/// Worst |P_n(x_k)| against its evaluation scale.
Residual zero_residual(const RecurrenceTable& tbl, const ZeroSet& zs);

/// x_{n,k} < x_{n-1,k} < x_{n,k+1} for all k.
bool interlaces(const ZeroSet& outer, const ZeroSet& inner);

/// max_k |x_{n,k}(z) z^{1/4} - x_{n,k}(1)| with scale x_{n,n}(1).
Residual zero_scaling_check(int n, const Real& z, const PrecisionContext& ctx);

/// gamma_1..gamma_{2 n_max - 1} (element i-1 holds gamma_i):
///   gamma_{2k+1} = -P_{k+1}(0)/P_k(0),  gamma_{2k} = -a_k P_{k-1}(0)/P_k(0).
/// Throws ContractViolation if some P_k(0) vanishes or a gamma is not positive.
std::vector<Real> gamma_chain(const std::vector<MonicPoly>& polys, const RecurrenceTable& tbl, int n_max);

/// Builds x S_k = S_{k+1} + gamma_k S_{k-1} and compares S_{2n}(x) with
/// P_n(x^2) coefficientwise.
Residual symmetrization_check(const std::vector<MonicPoly>& polys, const std::vector<Real>& gammas, int n);

/// max_{1<=k<=2n-1} c_{2n} gamma_k, c_{2n} = 4 cos^2(pi/(2n+1)) + eps.
Real largest_zero_bound(const std::vector<MonicPoly>& polys, const RecurrenceTable& tbl, int n, const Real& eps);

/// P_n''(x_k)/P_n'(x_k) against 4z x_k^3 + (ln A_n)'(x_k) at every zero.
Residual zeros_ode_check(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys, const ZeroSet& zs);

/// Limiting zero density of the scaled polynomials on (0, 4c t^{1/4}).
struct DensityModel {
  Real t;
  Real c;       // 140^{-1/4}
  Real beta_t;  // 4c t^{1/4}

  explicit DensityModel(const Real& t);
  Real operator()(const Real& x) const;
  /// Hypergeometric closed form; ConvergenceError when w >= 1.
  Real series(const Real& x) const;
  /// (1/(pi t)) int_{s0}^{t} ds / (sqrt(4c s^{1/4} - x) sqrt(x)) by quadrature.
  Real integral(const Real& x) const;
  /// 2F1 argument x / beta_t.
  Real w(const Real& x) const { return x / beta_t; }
  /// int_0^y omega.
  Real cdf(const Real& y) const;
  /// int_0^{beta_t} omega.
  Real normalization() const;
};

/// Series below w = 0.95, integral representation above.
Real density(const Real& x, const Real& t);

/// Kolmogorov distance between the empirical law of x_{n,k}(1)/N^{1/4} and
/// the density at t.
Real empirical_density_distance(int n, int N, const Real& t);

struct ChebyshevComparison {
  int n;
  Real beta;                     // 2 * 140^{-1/4}
  std::vector<Real> closed_form; // y_{n,k}, ascending
  std::vector<Real> eigen;       // constant-coefficient Jacobi route
  Real max_diff;
  Real w;                        // beta pi^2 / (2 (n+1)^2)
  Real y1_over_w;
};

ChebyshevComparison chebyshev_comparison(int n);

/// Zeros of the comparison family with diagonal k^{1/4} beta and squared
/// off-diagonal sqrt(k) beta^2 / 4.
std::vector<Real> ptilde_zeros(int n);

}  // namespace tfreud

#endif  // TFREUD_ZEROS_HPP
