#include "tfreud/tracked.hpp"

namespace tfreud {

Tracked operator+(const Tracked& a, const Tracked& b) { return {a.value + b.value, a.scale + b.scale}; }

Tracked operator-(const Tracked& a, const Tracked& b) { return {a.value - b.value, a.scale + b.scale}; }

Tracked operator*(const Tracked& a, const Tracked& b) {
  return {a.value * b.value, a.scale * abs(b.value) + abs(a.value) * b.scale};
}

Tracked operator/(const Tracked& a, const Tracked& b) {
  Real q = a.value / b.value;
  Real den = abs(b.value);
  return {q, (a.scale + abs(q) * b.scale) / den};
}

Tracked operator-(const Tracked& a) { return {-a.value, a.scale}; }

Residual Residual::between(const Tracked& lhs, const Tracked& rhs) {
  return {lhs.value - rhs.value, lhs.scale + rhs.scale};
}

Real Residual::ratio() const {
  if (value.is_zero()) return Real(0);
  if (scale.is_zero()) return Real(1e300);
  return abs(value) / scale;
}

bool Residual::within(const PrecisionContext& ctx) const { return abs(value) <= ctx.verify_tol(scale); }

const Residual& worse(const Residual& a, const Residual& b) { return b.ratio() > a.ratio() ? b : a; }

}  // namespace tfreud
