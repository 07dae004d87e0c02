#include "tfreud/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tfreud {

namespace {

thread_local mpfr_prec_t g_working_precision = 128;

mpfr_prec_t joint(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

mpfr_prec_t working_precision() { return g_working_precision; }

void set_working_precision(mpfr_prec_t bits) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
    throw std::invalid_argument("working precision out of range");
  }
  g_working_precision = bits;
}

PrecisionScope::PrecisionScope(mpfr_prec_t bits) : saved_(g_working_precision) {
  set_working_precision(bits);
}

PrecisionScope::~PrecisionScope() { g_working_precision = saved_; }

Real::Real() {
  mpfr_init2(v_, g_working_precision);
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, other.precision());
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real::Real(double v) : Real() { mpfr_set_d(v_, v, MPFR_RNDN); }

Real::Real(std::string_view text) : Real() {
  std::string s(text);
  if (s.empty() || mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a real number: '" + s + "'");
  }
}

Real Real::with_precision(mpfr_prec_t bits) {
  PrecisionScope scope(bits);
  return Real();
}

void Real::set_precision(mpfr_prec_t bits) { mpfr_prec_round(v_, bits, MPFR_RNDN); }

Real Real::rounded(mpfr_prec_t bits) const {
  Real r(*this);
  r.set_precision(bits);
  return r;
}

long Real::exponent2() const {
  if (!is_finite() || is_zero()) return 0;
  return mpfr_get_exp(v_);
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  digits = std::max(digits, 2);
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string out;
  if (mant.front() == '-') {
    out.push_back('-');
    mant.erase(0, 1);
  }
  out.push_back(mant[0]);
  out.push_back('.');
  out.append(mant, 1, std::string::npos);
  out.push_back('e');
  out += std::to_string(static_cast<long>(exp10) - 1);
  return out;
}

std::string Real::to_string() const {
  const auto digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 1;
  return to_string(digits);
}

std::string Real::to_fixed(int decimals) const {
  if (!is_finite()) return to_string(4);
  if (decimals < 0) throw std::invalid_argument("negative decimal count");
  // Enough bits to hold the scaled integer exactly.
  const mpfr_prec_t bits = std::max<mpfr_prec_t>(precision(), 64) + 4 * decimals + 8;
  mpfr_t scaled;
  mpfr_init2(scaled, bits);
  mpfr_ui_pow_ui(scaled, 10, static_cast<unsigned long>(decimals), MPFR_RNDN);
  mpfr_mul(scaled, scaled, v_, MPFR_RNDN);
  mpfr_round(scaled, scaled);  // half away from zero
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.0Rf", scaled);
  std::string digits(raw);
  mpfr_free_str(raw);
  mpfr_clear(scaled);

  bool negative = !digits.empty() && digits.front() == '-';
  if (negative) digits.erase(0, 1);
  if (decimals > 0) {
    if (digits.size() <= static_cast<size_t>(decimals)) {
      digits.insert(0, static_cast<size_t>(decimals) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<size_t>(decimals), 1, '.');
  }
  if (negative && digits.find_first_not_of("0.") != std::string::npos) digits.insert(0, 1, '-');
  return digits;
}

Real& Real::operator+=(const Real& o) {
  if (o.precision() > precision()) set_precision(o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  if (o.precision() > precision()) set_precision(o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  if (o.precision() > precision()) set_precision(o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (o.precision() > precision()) set_precision(o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r = Real::with_precision(joint(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r = Real::with_precision(joint(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r = Real::with_precision(joint(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r = Real::with_precision(joint(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

namespace {

template <typename Fn>
Real unary(const Real& x, Fn fn) {
  Real r = Real::with_precision(x.precision());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real abs(const Real& x) { return unary(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_abs(r, a, m); }); }
Real sqrt(const Real& x) { return unary(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_sqrt(r, a, m); }); }

Real root(const Real& x, unsigned long k) {
  Real r = Real::with_precision(x.precision());
  mpfr_rootn_ui(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r = Real::with_precision(std::max(x.precision(), y.precision()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long k) {
  Real r = Real::with_precision(x.precision());
  mpfr_pow_si(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

Real exp(const Real& x) { return unary(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_exp(r, a, m); }); }
Real log(const Real& x) { return unary(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_log(r, a, m); }); }
Real log2(const Real& x) { return unary(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_log2(r, a, m); }); }
Real cos(const Real& x) { return unary(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_cos(r, a, m); }); }
Real sin(const Real& x) { return unary(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_sin(r, a, m); }); }

Real ldexp(const Real& x, long k) {
  Real r(x);
  mpfr_mul_2si(r.get(), r.get(), k, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real pi() {
  Real r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real mpfr_tgamma(const Real& x) {
  return unary(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { mpfr_gamma(r, a, m); });
}

}  // namespace tfreud
