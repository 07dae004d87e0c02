#ifndef TFREUD_PRECISION_HPP
#define TFREUD_PRECISION_HPP

#include "tfreud/real.hpp"

namespace tfreud {

/// Working precision and the tolerances derived from it.
class PrecisionContext {
 public:
  static constexpr int kMinBits = 64;
  /// verify_tol carries a fixed slack of 2^12 units of roundoff.
  static constexpr int kSlackBits = 12;

  explicit PrecisionContext(int bits);

  /// Default precision for polynomial degrees up to `n_max`: 128 + 16 n_max.
  static int policy_bits(int n_max);
  static PrecisionContext for_degree(int n_max) { return PrecisionContext(policy_bits(n_max)); }

  int bits() const { return bits_; }
  /// Unit roundoff 2^(1-bits).
  Real eps() const;
  /// Absolute tolerance |scale| * eps * 2^12.
  Real verify_tol(const Real& scale) const;
  PrecisionContext doubled() const { return PrecisionContext(2 * bits_); }

  /// Makes `bits` the working precision for the lifetime of the returned guard.
  PrecisionScope scope() const { return PrecisionScope(bits_); }

 private:
  int bits_;
};

}  // namespace tfreud

#endif  // TFREUD_PRECISION_HPP
