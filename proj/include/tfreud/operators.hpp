#ifndef TFREUD_OPERATORS_HPP
#define TFREUD_OPERATORS_HPP

#include <array>
#include <utility>
#include <vector>

#include "tfreud/polynomial.hpp"
#include "tfreud/recurrence.hpp"
#include "tfreud/tracked.hpp"

namespace tfreud {

/// P_0..P_{n_max} from the recurrence, at the working precision.
std::vector<MonicPoly> poly_table(const RecurrenceTable& tbl);

/// P_k(0) with the convention P_{-1} = 0.
Tracked poly_at_zero(const std::vector<MonicPoly>& polys, int k);

/// beta_{n,k} in x^4 P_n = P_{n+4} + sum_{k=n-4}^{n+3} beta_{n,k} P_k.
Tracked beta(const RecurrenceTable& tbl, int n, int k);

struct BetaRow {
  int n;
  /// beta_{n,n-4} .. beta_{n,n+3}
  std::array<Tracked, 8> coeff;
  const Tracked& at(int k) const { return coeff[static_cast<size_t>(k - n + 4)]; }
};

/// Needs n + 3 <= n_max.
BetaRow beta_row(const RecurrenceTable& tbl, int n);

/// Row n of beta against row n of J^4 for the truncated monic Jacobi matrix
/// of size n + 5 (n + 4 <= n_max).
Residual j4_row_residual(const RecurrenceTable& tbl, int n);

/// x P'_{n+1} - (n+1) P_{n+1} - 4z sum_{k=n-3}^{n} beta_{n+1,k} P_k.
TrackedPoly structure_residual(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys, int n);
/// Same identity with the closed-form coefficients written in a, b, R, T.
TrackedPoly structure_residual_explicit(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys, int n);
/// Worst disagreement between the two coefficient routes, k = n-3..n.
Residual structure_coeff_agreement(const RecurrenceTable& tbl, int n);

/// The functions A_n, B_n of the Chen-Ismail ladder, as x*A_n and x*B_n over x.
struct LadderPair {
  int n;
  /// x A_n(x) = 4z x (x^2 + b_n x + R_n) + P_n(0)^2 / h_n
  TrackedPoly xA;
  /// x B_n(x) = 4z a_n x (x + b_n + b_{n-1}) + P_n(0) P_{n-1}(0) / h_{n-1}
  TrackedPoly xB;
  RationalFn A;
  RationalFn B;
};

LadderPair ladder_pair(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys, int n);

/// 4z(T_{n+1} + b_n R_n + T_n) against P_n(0)^2 / h_n.
Residual identity_i(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys, int n);
/// 4z(a_{n+1}R_{n+1} - a_n R_{n-1} + b_n(T_{n+1} - T_n)) against
/// 1 + P_n(0)(P_{n+1}(0) - a_n P_{n-1}(0)) / h_n.
Residual identity_ii(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys, int n);

/// Worst sampled residuals of
///   B_{n+1} + B_n = (x - b_n) A_n - v',
///   a_{n+1} A_{n+1} - a_n A_{n-1} = 1 + (x - b_n)(B_{n+1} - B_n).
std::pair<Residual, Residual> compat_residuals(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys,
                                               int n, const std::vector<Real>& x_samples);

/// x P'_{n+1} + D_n P_{n+1} = C_n P_n.
struct LoweringData {
  int n;
  TrackedPoly C;  // cubic, leading coefficient 4z a_{n+1}
  TrackedPoly D;  // quadratic
  RationalFn A;   // x / C_n
  RationalFn B;   // D_n / C_n
};

/// Needs n + 2 <= n_max.
LoweringData lowering_data(const RecurrenceTable& tbl, int n);

/// C_n assembled from beta_{n+1,k} against C_n itself at the samples (n >= 3).
Residual lowering_beta_route(const RecurrenceTable& tbl, const LoweringData& data, const std::vector<Real>& x_samples);

/// x P'_{n+1} + D_n P_{n+1} - C_n P_n.
TrackedPoly lowering_apply(const std::vector<MonicPoly>& polys, const LoweringData& data);
/// -a_{n+1}[x P'_{n+1} + D_n P_{n+1}] + (x - b_{n+1}) C_n P_{n+1} - C_n P_{n+2}.
TrackedPoly raising_apply(const std::vector<MonicPoly>& polys, const LoweringData& data, const RecurrenceTable& tbl);

/// The operator D_n applied to P_{n+1}, multiplied through by C_n^2 C_{n-1}.
TrackedPoly holonomic_poly_Dn(const std::vector<MonicPoly>& polys, const RecurrenceTable& tbl, int n);
/// Worst sampled residual of the cleared D_n identity (n >= 1).
Residual holonomic_residual_Dn(const std::vector<MonicPoly>& polys, const RecurrenceTable& tbl, int n,
                               const std::vector<Real>& x_samples);

/// P_n'' + S P_n' + Q P_n with S = -v' - (ln A_n)' and
/// Q = B_n' - B_n (ln A_n)' - B_n (v' + B_n) + a_n A_n A_{n-1},
/// multiplied through by x^2 * (x A_n).
TrackedPoly holonomic_poly_chen(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys, int n);
Residual holonomic_residual_chen(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys, int n,
                                 const std::vector<Real>& x_samples);

/// Worst relative gap between sum_{k<=n} P_k^2/h_k and
/// (P'_{n+1} P_n - P'_n P_{n+1}) / h_n.
Residual confluent_check(const std::vector<MonicPoly>& polys, const RecurrenceTable& tbl, int n,
                         const std::vector<Real>& x_samples);

/// Largest entry of J L - L J - J over rows 0..M-6 for the M x M truncation,
/// L = 4z (J^4)_- + diag(0..M-1). Needs M >= 10 and M <= n_max + 1.
Residual lax_block_check(const RecurrenceTable& tbl, int M);

/// 16 log-spaced points in (10^-2, 4 (n/(140z))^{1/4} + 1).
std::vector<Real> sample_grid(int n, const Real& z);

}  // namespace tfreud

#endif  // TFREUD_OPERATORS_HPP
