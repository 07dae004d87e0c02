#ifndef TFREUD_TRACKED_HPP
#define TFREUD_TRACKED_HPP

#include <concepts>

#include "tfreud/precision.hpp"
#include "tfreud/real.hpp"

namespace tfreud {

/// A value paired with a first-order bound on the magnitudes that fed it.
///
/// `scale` bounds the accumulated rounding error in units of the unit roundoff:
/// the computed value differs from the exact one by O(eps * scale). Sums add
/// scales, products use |a| s_b + s_a |b|, so cancellation shows up as
/// scale >> |value|.
struct Tracked {
  Real value;
  Real scale;

  /// A value carrying one rounding, e.g. a stored table entry.
  static Tracked input(const Real& v) { return {v, abs(v)}; }
  /// A value that is exact, e.g. a sample abscissa or an integer.
  static Tracked exact(const Real& v) { return {v, Real(0)}; }
};

Tracked operator+(const Tracked& a, const Tracked& b);
Tracked operator-(const Tracked& a, const Tracked& b);
Tracked operator*(const Tracked& a, const Tracked& b);
Tracked operator/(const Tracked& a, const Tracked& b);
Tracked operator-(const Tracked& a);

template <std::integral I>
Tracked operator*(I k, const Tracked& a) {
  return {Real(k) * a.value, abs(Real(k)) * a.scale};
}
template <std::integral I>
Tracked operator+(const Tracked& a, I k) {
  return {a.value + Real(k), a.scale + abs(Real(k))};
}
template <std::integral I>
Tracked operator-(const Tracked& a, I k) {
  return {a.value - Real(k), a.scale + abs(Real(k))};
}

/// Outcome of an identity check: a residual judged against a rounding scale.
struct Residual {
  Real value;
  Real scale;

  static Residual of(const Tracked& t) { return {t.value, t.scale}; }
  /// Difference of two tracked sides.
  static Residual between(const Tracked& lhs, const Tracked& rhs);

  /// |value| / scale, or 0 when both vanish.
  Real ratio() const;
  /// |value| <= verify_tol(scale).
  bool within(const PrecisionContext& ctx) const;
};

/// The residual with the larger ratio.
const Residual& worse(const Residual& a, const Residual& b);

}  // namespace tfreud

#endif  // TFREUD_TRACKED_HPP
