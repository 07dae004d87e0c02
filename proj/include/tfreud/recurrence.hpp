#ifndef TFREUD_RECURRENCE_HPP
#define TFREUD_RECURRENCE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tfreud/precision.hpp"
#include "tfreud/real.hpp"
#include "tfreud/tracked.hpp"

namespace tfreud {

/// Coefficients of x P_n = P_{n+1} + b_n P_n + a_n P_{n-1} for n = 0..n_max,
/// with h_n = <u, P_n^2>. Indices below the table follow the conventions
/// a_k = 0 (k <= 0), b_k = 0 (k < 0); such terms only ever meet a zero factor.
class RecurrenceTable {
 public:
  RecurrenceTable(Real z, std::vector<Real> a, std::vector<Real> b, std::vector<Real> h);

  const Real& z() const { return z_; }
  int n_max() const { return static_cast<int>(b_.size()) - 1; }

  /// Throw IndexError above n_max.
  Real a(int k) const;
  Real b(int k) const;
  Real h(int k) const;
  /// R_k = a_{k+1} + b_k^2 + a_k
  Real R(int k) const;
  /// T_k = a_k (b_k + b_{k-1})
  Real T(int k) const;

  /// The same quantities carrying rounding scales.
  Tracked ta(int k) const;
  Tracked tb(int k) const;
  Tracked tR(int k) const;
  Tracked tT(int k) const;

  const std::vector<Real>& a_values() const { return a_; }
  const std::vector<Real>& b_values() const { return b_; }
  const std::vector<Real>& h_values() const { return h_; }

  /// Copy rounded to `bits`.
  RecurrenceTable rounded(int bits) const;
  /// Copy truncated to degrees 0..n.
  RecurrenceTable truncated(int n) const;
  /// Copy with a_k (which = 'a') or b_k (which = 'b') shifted by delta.
  RecurrenceTable perturbed(char which, int k, const Real& delta) const;

 private:
  void check(int k) const;
  Real z_;
  std::vector<Real> a_, b_, h_;
};

/// Modified Chebyshev algorithm on the exact moments mu_0..mu_{2 n_max + 1}.
///
/// The inner loop runs at ctx.bits + reserve_bits (default 16 n_max + 64) and
/// tracks the magnitude of the cancelling terms; the table is rounded to
/// ctx.bits. Throws PrecisionExhausted with the failing index when the
/// surviving accuracy at some degree drops below ctx.bits or h_k is not
/// positive.
RecurrenceTable chebyshev_coeffs(const Real& z, int n_max, const PrecisionContext& ctx,
                                 std::optional<int> reserve_bits = std::nullopt);

/// 4z[a_{n+2}a_{n+1} + T_{n+1}(b_{n+1}+b_n) + R_n^2 + T_n(b_n+b_{n-1}) + a_n a_{n-1}] - (2n+1)
Residual lf_residual_1(const RecurrenceTable& tbl, int n);
/// 4z[a_{n+1}(T_{n+2}+T_n) - a_n(T_{n+1}+T_{n-1}) - T_n(R_n+R_{n-1}) + T_{n+1}(R_{n+1}+R_n)] - b_n
Residual lf_residual_2(const RecurrenceTable& tbl, int n);
/// a_{n+1}(T_{n+2}+b_{n+1}R_{n+1}+T_{n+1})(T_{n+1}+b_nR_n+T_n)
///   - [a_{n+1}R_{n+1} + b_nT_{n+1} + a_{n+1}a_n - (n+1)/(4z)]^2
Residual lf_residual_I(const RecurrenceTable& tbl, int n);

struct ForwardResult {
  RecurrenceTable table;
  /// First n where a_n or b_n leaves 10^3 verify_tol of the reference.
  std::optional<int> divergence_index;
};

/// Generates a_{n+2}, b_{n+2} from the two Laguerre-Freud equations at step
/// n, starting from {b_0, a_1, b_1}. h is filled by h_n = a_n h_{n-1}. The
/// result is compared with `reference` at the precision of ctx.
/// Throws InstabilityError if a linear coefficient vanishes.
ForwardResult lf_forward(const Real& b0, const Real& a1, const Real& b1, const Real& z, int n_max,
                         const RecurrenceTable& reference, const PrecisionContext& ctx);

/// (a_n / sqrt(n/(140z)), b_n / (2 (n/(140z))^{1/4}))
std::pair<Real, Real> asymptotic_ratio(const RecurrenceTable& tbl, int n);

/// (a_n(z) z^{1/2} / a_n(1) - 1, b_n(z) z^{1/4} / b_n(1) - 1)
std::pair<Real, Real> scaling_check(const RecurrenceTable& tbl_z, const RecurrenceTable& tbl_1, int n);

struct HScaling {
  /// h_n(z) z^{(2n+1)/4} / h_n(1) - 1
  Real integrated;
  /// 4z dh_n/dz / h_n + (2n+1) by central differences at steps h and h/2.
  Real derivative_h;
  Real derivative_h2;
};

HScaling h_scaling_check(const Real& z, int n, const PrecisionContext& ctx);

struct ConstantsCheck {
  bool wq1;           // 2A^2 + 8AB^2 + (2A+B^2)^2 = 1/2
  bool wq1_reduced;   // 3A^2 + 6AB^2 + B^4/2 = 1/4
  bool wq2;           // A(6AB+B^3)^2 = (3A^2+3AB^2-1/4)^2
  bool a_from_b;      // A = B^2/4
  bool b4_positive_branch;  // 5B^4/4 = -(15B^4/16 - 1/4) gives B^4 = 16/140
  long rejected_b4_num;     // other branch: B^4 = num/den
  long rejected_b4_den;
  bool all() const { return wq1 && wq1_reduced && wq2 && a_from_b && b4_positive_branch; }
};

/// Exact arithmetic in Q(sqrt 140) with A = 140^{-1/2}, B^2 = 4 * 140^{-1/2}.
ConstantsCheck asymptotic_constants_check();

}  // namespace tfreud

#endif  // TFREUD_RECURRENCE_HPP
