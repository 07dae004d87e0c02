#include "tfreud/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "tfreud/errors.hpp"

namespace tfreud {

Poly::Poly(std::vector<Real> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Real& c) { return Poly({c}); }

Poly Poly::monomial(int k, const Real& c) {
  std::vector<Real> v(static_cast<size_t>(k) + 1, Real(0));
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear_root(const Real& r) { return Poly({-r, Real(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Real Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return Real(0);
  return c_[static_cast<size_t>(k)];
}

Real Poly::eval(const Real& x) const {
  Real acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real Poly::eval_magnitude(const Real& x) const {
  const Real ax = tfreud::abs(x);
  Real acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * ax + tfreud::abs(*it);
  return acc;
}

Poly Poly::abs() const {
  std::vector<Real> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(tfreud::abs(c));
  return Poly(std::move(v));
}

Real Poly::max_abs_coeff() const {
  Real m(0);
  for (const auto& c : c_) m = max(m, tfreud::abs(c));
  return m;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Real(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Real(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Real& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }

Poly operator-(const Poly& a) {
  Poly r = a;
  r *= Real(-1);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Real> v(a.coeffs().size() + b.coeffs().size() - 1, Real(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    for (size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Real& s, Poly p) { return p *= s; }

Poly poly_diff(const Poly& p) {
  if (p.degree() < 1) return Poly();
  std::vector<Real> v;
  v.reserve(p.coeffs().size() - 1);
  for (size_t k = 1; k < p.coeffs().size(); ++k) v.push_back(p.coeffs()[k] * static_cast<long>(k));
  return Poly(std::move(v));
}

MonicPoly::MonicPoly(Poly p) : p_(std::move(p)) {
  if (p_.is_zero() || !(p_.coeffs().back() == 1)) {
    throw ContractViolation("monic polynomial needs leading coefficient 1");
  }
}

Real MonicPoly::sigma() const {
  if (degree() == 0) return Real(0);
  return -p_.coeff(degree() - 1);
}

TrackedPoly TrackedPoly::constant(const Tracked& c) { return {Poly::constant(c.value), Poly::constant(c.scale)}; }

Tracked TrackedPoly::eval(const Real& x) const {
  // Horner's own rounding is bounded by the magnitude sum, which the scale
  // polynomial dominates only when every coefficient carries a rounding.
  Real s = scale.eval_magnitude(x);
  Real m = value.eval_magnitude(x);
  return {value.eval(x), max(s, m)};
}

Residual TrackedPoly::worst_coefficient() const {
  Residual worst{Real(0), Real(0)};
  const int deg = std::max(value.degree(), scale.degree());
  for (int k = 0; k <= deg; ++k) worst = worse(worst, Residual{value.coeff(k), scale.coeff(k)});
  return worst;
}

bool TrackedPoly::vanishes(const PrecisionContext& ctx) const {
  const int deg = std::max(value.degree(), scale.degree());
  for (int k = 0; k <= deg; ++k) {
    if (!Residual{value.coeff(k), scale.coeff(k)}.within(ctx)) return false;
  }
  return true;
}

TrackedPoly operator+(const TrackedPoly& a, const TrackedPoly& b) { return {a.value + b.value, a.scale + b.scale}; }

TrackedPoly operator-(const TrackedPoly& a, const TrackedPoly& b) { return {a.value - b.value, a.scale + b.scale}; }

TrackedPoly operator*(const TrackedPoly& a, const TrackedPoly& b) {
  return {a.value * b.value, a.scale * b.value.abs() + a.value.abs() * b.scale};
}

TrackedPoly operator*(const Tracked& s, const TrackedPoly& p) {
  return {s.value * p.value, s.scale * p.value.abs() + tfreud::abs(s.value) * p.scale};
}

TrackedPoly diff(const TrackedPoly& p) { return {poly_diff(p.value), poly_diff(p.scale)}; }

RationalFn::RationalFn(TrackedPoly num, TrackedPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.value.is_zero()) throw ContractViolation("rational function with zero denominator");
}

RationalFn::RationalFn(const Poly& num, const Poly& den)
    : RationalFn(TrackedPoly::input(num), TrackedPoly::input(den)) {}

Tracked RationalFn::eval(const Real& x) const {
  Tracked d = den_.eval(x);
  if (d.value.is_zero()) throw DomainError("rational function evaluated at a pole");
  return num_.eval(x) / d;
}

RationalFn RationalFn::derivative() const {
  return RationalFn(diff(num_) * den_ - num_ * diff(den_), den_ * den_);
}

}  // namespace tfreud
