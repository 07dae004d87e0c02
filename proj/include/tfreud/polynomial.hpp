#ifndef TFREUD_POLYNOMIAL_HPP
#define TFREUD_POLYNOMIAL_HPP

#include <cstddef>
#include <vector>

#include "tfreud/real.hpp"
#include "tfreud/tracked.hpp"

namespace tfreud {

/// Dense polynomial, coefficient k multiplies x^k. Trailing exact zeros are
/// trimmed so that degree() is meaningful; the zero polynomial has degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Real> coeffs);

  static Poly constant(const Real& c);
  static Poly monomial(int k, const Real& c = Real(1));
  /// x - r
  static Poly linear_root(const Real& r);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^k, zero beyond the stored range.
  Real coeff(int k) const;
  const std::vector<Real>& coeffs() const { return c_; }

  Real eval(const Real& x) const;
  /// sum |c_k| |x|^k, the natural rounding scale of eval(x).
  Real eval_magnitude(const Real& x) const;
  Poly abs() const;
  /// Largest |c_k|.
  Real max_abs_coeff() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Real& s);

 private:
  void trim();
  std::vector<Real> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Real& s, Poly p);

inline Poly poly_add(const Poly& p, const Poly& q) { return p + q; }
inline Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }
/// Formal derivative.
Poly poly_diff(const Poly& p);

/// P_n(x) = x^n + sum_{k<n} lambda_k x^k.
class MonicPoly {
 public:
  /// Throws ContractViolation unless the leading coefficient is exactly 1.
  explicit MonicPoly(Poly p);

  int degree() const { return p_.degree(); }
  const Poly& poly() const { return p_; }
  Real lambda(int k) const { return p_.coeff(k); }
  /// sigma_n = -lambda_{n,n-1}; zero for n = 0.
  Real sigma() const;
  Real at_zero() const { return p_.coeff(0); }
  Real eval(const Real& x) const { return p_.eval(x); }

 private:
  Poly p_;
};

/// Polynomial with a companion nonnegative polynomial bounding the rounding
/// scale of each coefficient.
struct TrackedPoly {
  Poly value;
  Poly scale;

  /// Coefficients carry one rounding each.
  static TrackedPoly input(const Poly& p) { return {p, p.abs()}; }
  static TrackedPoly exact(const Poly& p) { return {p, Poly()}; }
  static TrackedPoly constant(const Tracked& c);

  Tracked eval(const Real& x) const;
  /// Per-coefficient residual: coefficient k judged against scale k.
  Residual worst_coefficient() const;
  /// All coefficients within verify_tol of their scale.
  bool vanishes(const PrecisionContext& ctx) const;
};

TrackedPoly operator+(const TrackedPoly& a, const TrackedPoly& b);
TrackedPoly operator-(const TrackedPoly& a, const TrackedPoly& b);
TrackedPoly operator*(const TrackedPoly& a, const TrackedPoly& b);
TrackedPoly operator*(const Tracked& s, const TrackedPoly& p);
TrackedPoly diff(const TrackedPoly& p);

/// numerator / denominator with tracked coefficients.
class RationalFn {
 public:
  /// Throws ContractViolation if the denominator is identically zero.
  RationalFn(TrackedPoly num, TrackedPoly den);
  RationalFn(const Poly& num, const Poly& den);

  const TrackedPoly& num() const { return num_; }
  const TrackedPoly& den() const { return den_; }

  /// Throws DomainError where the denominator vanishes.
  Tracked eval(const Real& x) const;
  Real operator()(const Real& x) const { return eval(x).value; }
  /// Quotient rule on the stored polynomials.
  RationalFn derivative() const;

 private:
  TrackedPoly num_;
  TrackedPoly den_;
};

}  // namespace tfreud

#endif  // TFREUD_POLYNOMIAL_HPP
