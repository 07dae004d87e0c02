#include "tfreud/precision.hpp"

#include <string>

#include "tfreud/errors.hpp"

namespace tfreud {

PrecisionContext::PrecisionContext(int bits) : bits_(bits) {
  if (bits < kMinBits) {
    throw DomainError("precision must be at least " + std::to_string(kMinBits) + " bits, got " +
                      std::to_string(bits));
  }
}

int PrecisionContext::policy_bits(int n_max) { return 128 + 16 * (n_max < 0 ? 0 : n_max); }

Real PrecisionContext::eps() const {
  PrecisionScope s(bits_);
  return ldexp(Real(1), 1 - bits_);
}

Real PrecisionContext::verify_tol(const Real& scale) const {
  PrecisionScope s(bits_);
  return ldexp(abs(scale), 1 - bits_ + kSlackBits);
}

}  // namespace tfreud
