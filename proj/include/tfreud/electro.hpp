#ifndef TFREUD_ELECTRO_HPP
#define TFREUD_ELECTRO_HPP

#include <vector>

#include "tfreud/polynomial.hpp"
#include "tfreud/recurrence.hpp"

namespace tfreud {

/// V_n(x) = z x^4 + ln|x(x^2 + b_n x + R_n) + kappa| - ln|x|,
/// kappa = P_n(0)^2 / (4z h_n).
struct ExternalField {
  int n;
  Real z;
  Real b;
  Real R;
  Real kappa;

  static ExternalField build(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys, int n);

  /// Throws DomainError for x <= 0 or a vanishing logarithm argument.
  Real value(const Real& x) const;
  Real derivative(const Real& x) const;
};

/// Total energy of n unit charges on (0, inf) in the field V_n, with gradient.
struct ElectroSystem {
  std::vector<Real> positions;
  int n;
  Real z;
  Real energy;
  /// dE / dx_k = -2 sum_{j != k} 1/(x_k - x_j) + V_n'(x_k)
  std::vector<Real> gradient;

  Real max_gradient() const;
};

/// Throws DomainError on coincident or non-positive positions.
ElectroSystem electro_energy(const std::vector<Real>& positions, int n, const RecurrenceTable& tbl,
                             const std::vector<MonicPoly>& polys);

/// Gradient at the zeros against the gradient after moving every charge by
/// `rel` times the local spacing (alternating sign).
struct Stationarity {
  Real at_zeros;
  Real perturbed;
  Real ratio() const { return perturbed.is_zero() ? Real(0) : at_zeros / perturbed; }
};

Stationarity stationarity_check(const std::vector<Real>& zeros, int n, const RecurrenceTable& tbl,
                                const std::vector<MonicPoly>& polys, const Real& rel);

/// max_k |dE/dx_k - central difference of E with step h|.
Real gradient_fd_error(const std::vector<Real>& positions, int n, const RecurrenceTable& tbl,
                       const std::vector<MonicPoly>& polys, const Real& h);

Real potential_eval(const Real& x, int n, const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys);

}  // namespace tfreud

#endif  // TFREUD_ELECTRO_HPP
