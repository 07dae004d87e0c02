#include "tfreud/special.hpp"

#include <string>

#include "tfreud/errors.hpp"

namespace tfreud {

Real gamma(const Real& x) {
  if (!(x > 0)) throw DomainError("gamma: argument must be positive, got " + x.to_string(8));
  return mpfr_tgamma(x);
}

Real hyp2f1_series(const Real& a, const Real& b, const Real& c, const Real& w) {
  if (!(abs(w) < 1)) throw ConvergenceError("hyp2f1_series: |w| >= 1, series diverges or converges too slowly");
  Real nearest(c);
  mpfr_round(nearest.get(), c.get());
  if (c <= 0 && nearest == c) throw DomainError("hyp2f1_series: c is a non-positive integer");

  const mpfr_prec_t bits = working_precision();
  const Real tol = ldexp(Real(1), 1 - static_cast<long>(bits) + 12);
  constexpr long kTermCap = 1000000;

  Real sum(1);
  Real term(1);
  for (long k = 0; k < kTermCap; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * w;
    sum += term;
    if (term.is_zero() || abs(term) <= tol * abs(sum)) return sum;
  }
  throw ConvergenceError("hyp2f1_series: term cap reached");
}

namespace {

// Sum of f(x_k) w_k over the abscissae t = offset + j * step, j = 0, 1, ...,
// on both sides of the origin; offset 0 counts the centre once.
Real tanh_sinh_sweep(const Integrand& f, const Real& lo, const Real& hi, const Real& step, const Real& offset) {
  const Real half = (hi - lo) / 2;
  const Real centre = (hi + lo) / 2;
  const Real halfpi = pi() / 2;
  const auto bits = static_cast<long>(working_precision());
  // Below this distance an endpoint offset is lost in rounding. A zero
  // endpoint keeps full relative precision, so singular tails there can be
  // followed much further.
  auto cutoff = [&](const Real& end) {
    return end.is_zero() ? ldexp(abs(half), -3 * bits) : ldexp(max(abs(end), abs(half)), -bits);
  };
  const Real cut_lo = cutoff(lo), cut_hi = cutoff(hi);
  Real acc(0);
  for (long j = 0;; ++j) {
    const Real t = offset + step * j;
    const Real et = exp(t);
    const Real cosh_t = (et + 1 / et) / 2;
    const Real sinh_t = (et - 1 / et) / 2;
    const Real u = halfpi * sinh_t;
    const Real eu = exp(u);
    const Real cosh_u = (eu + 1 / eu) / 2;
    // Distance from the nearer endpoint, computed without cancellation.
    const Real dist = half * 2 / (eu * eu + 1);
    const bool use_lo = abs(dist) >= cut_lo, use_hi = abs(dist) >= cut_hi;
    if (!use_lo && !use_hi) break;
    const Real weight = half * halfpi * cosh_t / (cosh_u * cosh_u);
    if (t.is_zero()) {
      acc += weight * f(centre);
    } else {
      if (use_hi) acc += weight * f(hi - dist);
      if (use_lo) acc += weight * f(lo + dist);
    }
  }
  return acc;
}

}  // namespace

Real integrate(const Integrand& f, const Real& lo, const Real& hi, const Real& rel_tol, int max_level) {
  if (lo == hi) return Real(0);
  Real step(1);
  Real sum = tanh_sinh_sweep(f, lo, hi, step, Real(0));
  Real estimate = sum * step;
  for (int level = 1; level <= max_level; ++level) {
    step /= 2;
    sum += tanh_sinh_sweep(f, lo, hi, step * 2, step);
    const Real next = sum * step;
    if (level >= 3 && abs(next - estimate) <= rel_tol * abs(next)) return next;
    estimate = next;
  }
  throw ConvergenceError("integrate: no convergence after " + std::to_string(max_level) + " levels");
}

}  // namespace tfreud
