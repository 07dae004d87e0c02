#ifndef TFREUD_REAL_HPP
#define TFREUD_REAL_HPP

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace tfreud {

/// Binary precision used for values created from literals on this thread.
mpfr_prec_t working_precision();
void set_working_precision(mpfr_prec_t bits);

/// RAII guard that sets the thread's working precision and restores it.
class PrecisionScope {
 public:
  explicit PrecisionScope(mpfr_prec_t bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

/// Arbitrary-precision real backed by an mpfr_t.
///
/// Values built from literals take the thread's working precision. Copies keep
/// the precision of their source, and the result of a binary operation carries
/// the larger precision of its operands, so high-precision data never degrades
/// silently when it meets a literal.
class Real {
 public:
  Real();
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  template <std::signed_integral I>
  Real(I v) : Real() {
    mpfr_set_si(v_, static_cast<long>(v), MPFR_RNDN);
  }
  template <std::unsigned_integral I>
  Real(I v) : Real() {
    mpfr_set_ui(v_, static_cast<unsigned long>(v), MPFR_RNDN);
  }
  Real(double v);
  /// Parses a decimal literal; throws std::invalid_argument on malformed input.
  explicit Real(std::string_view text);

  /// A zero with an explicit precision.
  static Real with_precision(mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  /// Rounds to `bits` in place.
  void set_precision(mpfr_prec_t bits);
  Real rounded(mpfr_prec_t bits) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  long exponent2() const;

  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits) const;
  /// Scientific notation carrying every bit of the mantissa.
  std::string to_string() const;
  /// Fixed notation rounded half away from zero to `decimals` places.
  std::string to_fixed(int decimals) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  mpfr_t v_;
};

template <std::integral I>
Real operator+(const Real& a, I b) { return a + Real(b); }
template <std::integral I>
Real operator+(I a, const Real& b) { return Real(a) + b; }
template <std::integral I>
Real operator-(const Real& a, I b) { return a - Real(b); }
template <std::integral I>
Real operator-(I a, const Real& b) { return Real(a) - b; }
template <std::integral I>
Real operator*(const Real& a, I b) { return a * Real(b); }
template <std::integral I>
Real operator*(I a, const Real& b) { return Real(a) * b; }
template <std::integral I>
Real operator/(const Real& a, I b) { return a / Real(b); }
template <std::integral I>
Real operator/(I a, const Real& b) { return Real(a) / b; }
template <std::integral I>
bool operator==(const Real& a, I b) { return a == Real(b); }
template <std::integral I>
std::partial_ordering operator<=>(const Real& a, I b) { return a <=> Real(b); }

Real abs(const Real& x);
Real sqrt(const Real& x);
/// Real k-th root, x >= 0.
Real root(const Real& x, unsigned long k);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long k);
Real exp(const Real& x);
Real log(const Real& x);
Real log2(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
/// Multiplies by 2^k exactly.
Real ldexp(const Real& x, long k);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
/// pi at the working precision.
Real pi();
/// Machine Gamma function, correctly rounded.
Real mpfr_tgamma(const Real& x);

}  // namespace tfreud

#endif  // TFREUD_REAL_HPP
