#ifndef TFREUD_SPECIAL_HPP
#define TFREUD_SPECIAL_HPP

#include <functional>

#include "tfreud/real.hpp"

namespace tfreud {

/// Gamma function for x > 0 at the precision of x; DomainError otherwise.
Real gamma(const Real& x);

/// Gauss series 2F1(a,b;c;w) for |w| < 1, summed until a term drops below
/// the working-precision tolerance of the partial sum.
/// Throws ConvergenceError for |w| >= 1 or when the term cap is reached,
/// DomainError when c is a non-positive integer.
Real hyp2f1_series(const Real& a, const Real& b, const Real& c, const Real& w);

using Integrand = std::function<Real(const Real&)>;

/// Tanh-sinh quadrature of f over [lo, hi]. The abscissae never touch the
/// endpoints, so integrable endpoint singularities are tolerated. Levels are
/// refined until two successive estimates agree to `rel_tol` relative.
/// Throws ConvergenceError after `max_level` refinements.
Real integrate(const Integrand& f, const Real& lo, const Real& hi, const Real& rel_tol, int max_level = 14);

}  // namespace tfreud

#endif  // TFREUD_SPECIAL_HPP
