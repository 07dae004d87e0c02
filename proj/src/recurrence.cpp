#include "tfreud/recurrence.hpp"

#include <boost/rational.hpp>

#include <cmath>
#include <string>

#include "tfreud/errors.hpp"
#include "tfreud/moments.hpp"

namespace tfreud {

RecurrenceTable::RecurrenceTable(Real z, std::vector<Real> a, std::vector<Real> b, std::vector<Real> h)
    : z_(std::move(z)), a_(std::move(a)), b_(std::move(b)), h_(std::move(h)) {
  if (a_.size() != b_.size() || h_.size() != b_.size() || b_.empty()) {
    throw ContractViolation("recurrence table: a, b, h must have equal nonzero length");
  }
}

void RecurrenceTable::check(int k) const {
  if (k > n_max()) {
    throw IndexError("recurrence index " + std::to_string(k) + " exceeds n_max " + std::to_string(n_max()));
  }
}

Real RecurrenceTable::a(int k) const {
  if (k <= 0) return Real(0);
  check(k);
  return a_[static_cast<size_t>(k)];
}

Real RecurrenceTable::b(int k) const {
  if (k < 0) return Real(0);
  check(k);
  return b_[static_cast<size_t>(k)];
}

Real RecurrenceTable::h(int k) const {
  if (k < 0) throw IndexError("negative norm index");
  check(k);
  return h_[static_cast<size_t>(k)];
}

Real RecurrenceTable::R(int k) const {
  const Real bk = b(k);
  return a(k + 1) + bk * bk + a(k);
}

Real RecurrenceTable::T(int k) const { return a(k) * (b(k) + b(k - 1)); }

Tracked RecurrenceTable::ta(int k) const { return Tracked::input(a(k)); }
Tracked RecurrenceTable::tb(int k) const { return Tracked::input(b(k)); }
Tracked RecurrenceTable::tR(int k) const { return ta(k + 1) + tb(k) * tb(k) + ta(k); }
Tracked RecurrenceTable::tT(int k) const { return ta(k) * (tb(k) + tb(k - 1)); }

RecurrenceTable RecurrenceTable::rounded(int bits) const {
  auto round_all = [bits](const std::vector<Real>& v) {
    std::vector<Real> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.rounded(bits));
    return out;
  };
  return RecurrenceTable(z_.rounded(bits), round_all(a_), round_all(b_), round_all(h_));
}

RecurrenceTable RecurrenceTable::truncated(int n) const {
  check(n);
  const auto end = static_cast<std::ptrdiff_t>(n) + 1;
  return RecurrenceTable(z_, {a_.begin(), a_.begin() + end}, {b_.begin(), b_.begin() + end},
                         {h_.begin(), h_.begin() + end});
}

RecurrenceTable RecurrenceTable::perturbed(char which, int k, const Real& delta) const {
  check(k);
  RecurrenceTable t = *this;
  if (k < 0) throw IndexError("negative perturbation index");
  auto idx = static_cast<size_t>(k);
  if (which == 'a') {
    if (k == 0) throw IndexError("a_0 is fixed at zero");
    t.a_[idx] += delta;
  } else if (which == 'b') {
    t.b_[idx] += delta;
  } else {
    throw ContractViolation(std::string("unknown coefficient '") + which + "'");
  }
  return t;
}

RecurrenceTable chebyshev_coeffs(const Real& z, int n_max, const PrecisionContext& ctx,
                                 std::optional<int> reserve_bits) {
  if (!(z > 0)) throw DomainError("chebyshev_coeffs: z must be positive");
  if (n_max < 0) throw DomainError("chebyshev_coeffs: negative n_max");
  const int reserve = reserve_bits.value_or(16 * n_max + 64);
  if (reserve < 0) throw DomainError("chebyshev_coeffs: negative reserve");
  const int inner_bits = ctx.bits() + reserve;

  std::vector<Real> a(static_cast<size_t>(n_max) + 1), b(a.size()), h(a.size());
  {
    PrecisionScope scope(inner_bits);
    const int L = 2 * n_max + 1;
    const Real zi = z.rounded(inner_bits);
    const MomentSequence mu(zi, L);

    // sigma_{k,l} = <u, P_k x^l>; mag bounds the sum of |terms| behind it.
    std::vector<Real> prev2(static_cast<size_t>(L) + 1, Real(0)), mag2(prev2);
    std::vector<Real> prev(mu.values()), mag(mu.values());
    std::vector<Real> cur(prev.size()), curmag(prev.size());

    a[0] = Real(0);
    b[0] = mu[1] / mu[0];
    h[0] = mu[0];

    auto lost_bits = [](const Real& m, const Real& v) {
      if (v.is_zero()) return 1e9;
      return std::max(0.0, log2(m / abs(v)).to_double());
    };

    for (int k = 1; k <= n_max; ++k) {
      const Real& bk = b[static_cast<size_t>(k - 1)];
      const Real& ak = a[static_cast<size_t>(k - 1)];
      const Real abk = abs(bk);
      for (int l = k; l <= L - k; ++l) {
        const auto i = static_cast<size_t>(l);
        cur[i] = prev[i + 1] - bk * prev[i] - ak * prev2[i];
        curmag[i] = mag[i + 1] + abk * mag[i] + ak * mag2[i];
      }
      const auto kk = static_cast<size_t>(k);
      const Real& s_kk = cur[kk];
      if (!(s_kk > 0)) {
        throw PrecisionExhausted(k, "precision exhausted at index " + std::to_string(k) + ": h_k not positive");
      }
      a[kk] = s_kk / prev[kk - 1];
      const Real q1 = cur[kk + 1] / s_kk;
      const Real q2 = prev[kk] / prev[kk - 1];
      b[kk] = q1 - q2;
      h[kk] = s_kk;

      // Relative error scale of b_k from both quotients.
      const Real r_kk = curmag[kk] / s_kk;
      const Real r_k1 = cur[kk + 1].is_zero() ? curmag[kk + 1] / s_kk : curmag[kk + 1] / abs(cur[kk + 1]);
      const Real r_pk = prev[kk].is_zero() ? mag[kk] / abs(prev[kk - 1]) : mag[kk] / abs(prev[kk]);
      const Real r_pp = mag[kk - 1] / abs(prev[kk - 1]);
      const Real b_scale = abs(q1) * (r_k1 + r_kk) + abs(q2) * (r_pk + r_pp);
      const double lost = std::max(lost_bits(curmag[kk], s_kk), lost_bits(b_scale, b[kk]));
      if (static_cast<double>(inner_bits) - lost < static_cast<double>(ctx.bits() - 8)) {
        throw PrecisionExhausted(k, "precision exhausted at index " + std::to_string(k) + ": about " +
                                        std::to_string(static_cast<int>(lost)) + " of " +
                                        std::to_string(inner_bits) + " bits lost");
      }

      std::swap(prev2, prev);
      std::swap(mag2, mag);
      std::swap(prev, cur);
      std::swap(mag, curmag);
    }
  }
  return RecurrenceTable(z, std::move(a), std::move(b), std::move(h)).rounded(ctx.bits());
}

namespace {

void require_range(const RecurrenceTable& tbl, int n, int lo, int hi_offset, const char* what) {
  if (n < lo || n > tbl.n_max() - hi_offset) {
    throw IndexError(std::string(what) + ": index " + std::to_string(n) + " outside " + std::to_string(lo) +
                     ".." + std::to_string(tbl.n_max() - hi_offset));
  }
}

}  // namespace

Residual lf_residual_1(const RecurrenceTable& tbl, int n) {
  require_range(tbl, n, 0, 2, "lf_residual_1");
  const Tracked z4 = 4 * Tracked::input(tbl.z());
  const Tracked inner = tbl.ta(n + 2) * tbl.ta(n + 1) + tbl.tT(n + 1) * (tbl.tb(n + 1) + tbl.tb(n)) +
                        tbl.tR(n) * tbl.tR(n) + tbl.tT(n) * (tbl.tb(n) + tbl.tb(n - 1)) +
                        tbl.ta(n) * tbl.ta(n - 1);
  return Residual::between(z4 * inner, Tracked::exact(Real(2 * n + 1)));
}

Residual lf_residual_2(const RecurrenceTable& tbl, int n) {
  require_range(tbl, n, 0, 2, "lf_residual_2");
  const Tracked z4 = 4 * Tracked::input(tbl.z());
  const Tracked inner = tbl.ta(n + 1) * (tbl.tT(n + 2) + tbl.tT(n)) - tbl.ta(n) * (tbl.tT(n + 1) + tbl.tT(n - 1)) -
                        tbl.tT(n) * (tbl.tR(n) + tbl.tR(n - 1)) + tbl.tT(n + 1) * (tbl.tR(n + 1) + tbl.tR(n));
  return Residual::between(z4 * inner, tbl.tb(n));
}

Residual lf_residual_I(const RecurrenceTable& tbl, int n) {
  require_range(tbl, n, 0, 2, "lf_residual_I");
  const Tracked left = tbl.ta(n + 1) * (tbl.tT(n + 2) + tbl.tb(n + 1) * tbl.tR(n + 1) + tbl.tT(n + 1)) *
                       (tbl.tT(n + 1) + tbl.tb(n) * tbl.tR(n) + tbl.tT(n));
  const Tracked shift = Tracked::exact(Real(n + 1)) / (4 * Tracked::input(tbl.z()));
  const Tracked sq = tbl.ta(n + 1) * tbl.tR(n + 1) + tbl.tb(n) * tbl.tT(n + 1) + tbl.ta(n + 1) * tbl.ta(n) - shift;
  return Residual::between(left, sq * sq);
}

ForwardResult lf_forward(const Real& b0, const Real& a1, const Real& b1, const Real& z, int n_max,
                         const RecurrenceTable& reference, const PrecisionContext& ctx) {
  if (n_max < 1) throw DomainError("lf_forward: n_max must be at least 1");
  auto scope = ctx.scope();
  const auto size = static_cast<size_t>(n_max) + 1;
  std::vector<Real> a(size, Real(0)), b(size, Real(0)), h(size, Real(0));
  a[1] = a1.rounded(ctx.bits());
  b[0] = b0.rounded(ctx.bits());
  b[1] = b1.rounded(ctx.bits());
  const Real zz = z.rounded(ctx.bits());

  auto A = [&a](int k) { return k <= 0 ? Real(0) : a[static_cast<size_t>(k)]; };
  auto B = [&b](int k) { return k < 0 ? Real(0) : b[static_cast<size_t>(k)]; };
  auto T = [&](int k) { return A(k) * (B(k) + B(k - 1)); };
  auto R = [&](int k) { return A(k + 1) + B(k) * B(k) + A(k); };

  for (int n = 0; n + 2 <= n_max; ++n) {
    const Real z4 = 4 * zz;
    const Real lin_a = z4 * A(n + 1);
    if (lin_a.is_zero()) throw InstabilityError(n, "lf_forward: vanishing coefficient of a_{n+2} at n=" + std::to_string(n));
    const Real Rn = R(n);
    const Real rest = T(n + 1) * (B(n + 1) + B(n)) + Rn * Rn + T(n) * (B(n) + B(n - 1)) + A(n) * A(n - 1);
    a[static_cast<size_t>(n + 2)] = (Real(2 * n + 1) - z4 * rest) / lin_a;

    // LFeq12 is linear in T_{n+2} = a_{n+2}(b_{n+2} + b_{n+1}).
    const Real known = A(n + 1) * T(n) - A(n) * (T(n + 1) + T(n - 1)) - T(n) * (Rn + R(n - 1)) +
                       T(n + 1) * (R(n + 1) + Rn);
    const Real an2 = A(n + 2);
    if ((lin_a * an2).is_zero()) {
      throw InstabilityError(n, "lf_forward: vanishing coefficient of b_{n+2} at n=" + std::to_string(n));
    }
    const Real Tn2 = (B(n) - z4 * known) / lin_a;
    b[static_cast<size_t>(n + 2)] = Tn2 / an2 - B(n + 1);
  }

  h[0] = moment(0, zz);
  for (size_t k = 1; k < size; ++k) h[k] = a[k] * h[k - 1];

  ForwardResult out{RecurrenceTable(zz, std::move(a), std::move(b), std::move(h)), std::nullopt};
  const int upto = std::min(n_max, reference.n_max());
  const Real factor(1000);
  for (int k = 0; k <= upto; ++k) {
    const Real da = abs(out.table.a(k) - reference.a(k));
    const Real db = abs(out.table.b(k) - reference.b(k));
    if (!(da <= factor * ctx.verify_tol(reference.a(k))) || !(db <= factor * ctx.verify_tol(reference.b(k)))) {
      out.divergence_index = k;
      break;
    }
  }
  return out;
}

std::pair<Real, Real> asymptotic_ratio(const RecurrenceTable& tbl, int n) {
  if (n < 1) throw IndexError("asymptotic_ratio needs n >= 1");
  const Real s = Real(n) / (140 * tbl.z());
  return {tbl.a(n) / sqrt(s), tbl.b(n) / (2 * root(s, 4))};
}

std::pair<Real, Real> scaling_check(const RecurrenceTable& tbl_z, const RecurrenceTable& tbl_1, int n) {
  const Real& z = tbl_z.z();
  const Real ea = n == 0 ? Real(0) : tbl_z.a(n) * sqrt(z) / tbl_1.a(n) - 1;
  const Real eb = tbl_z.b(n) * root(z, 4) / tbl_1.b(n) - 1;
  return {ea, eb};
}

HScaling h_scaling_check(const Real& z, int n, const PrecisionContext& ctx) {
  auto scope = ctx.scope();
  auto hn = [&](const Real& zz) { return chebyshev_coeffs(zz, n, ctx).h(n); };
  const Real base = hn(Real(1));
  const Real at_z = hn(z);
  HScaling out;
  out.integrated = at_z * pow(z, Real(2 * n + 1) / 4) / base - 1;
  const Real step = z * ldexp(Real(1), -ctx.bits() / 4);
  auto deriv = [&](const Real& hh) {
    const Real d = (hn(z + hh) - hn(z - hh)) / (2 * hh);
    return 4 * z * d / at_z + (2 * n + 1);
  };
  out.derivative_h = deriv(step);
  out.derivative_h2 = deriv(step / 2);
  return out;
}

namespace {

using Q = boost::rational<long long>;

// p + q sqrt(140)
struct Surd {
  Q p, q;
};

Surd operator+(const Surd& x, const Surd& y) { return {x.p + y.p, x.q + y.q}; }
Surd operator-(const Surd& x, const Surd& y) { return {x.p - y.p, x.q - y.q}; }
Surd operator*(const Surd& x, const Surd& y) { return {x.p * y.p + 140 * x.q * y.q, x.p * y.q + x.q * y.p}; }
Surd operator*(const Q& s, const Surd& x) { return {s * x.p, s * x.q}; }
bool operator==(const Surd& x, const Surd& y) { return x.p == y.p && x.q == y.q; }
Surd rat(const Q& v) { return {v, Q(0)}; }

}  // namespace

ConstantsCheck asymptotic_constants_check() {
  const Surd A{Q(0), Q(1, 140)};   // 140^{-1/2}
  const Surd B2{Q(0), Q(4, 140)};  // B^2 = 4 * 140^{-1/2}
  const Surd B4 = B2 * B2;
  const Surd A2 = A * A;

  ConstantsCheck c{};
  const Surd twoA_B2 = Q(2) * A + B2;
  c.wq1 = Q(2) * A2 + Q(8) * A * B2 + twoA_B2 * twoA_B2 == rat(Q(1, 2));
  c.wq1_reduced = Q(3) * A2 + Q(6) * A * B2 + Q(1, 2) * B4 == rat(Q(1, 4));
  // (6AB + B^3)^2 = B^2 (6A + B^2)^2 keeps everything in Q(sqrt 140).
  const Surd six_a_b2 = Q(6) * A + B2;
  const Surd rhs_base = Q(3) * A2 + Q(3) * A * B2 - rat(Q(1, 4));
  c.wq2 = A * B2 * six_a_b2 * six_a_b2 == rhs_base * rhs_base;
  c.a_from_b = A == Q(1, 4) * B2;

  // 5B^4/4 = s (15B^4/16 - 1/4) with s = -1 gives B^4 = 4/35 = 16/140;
  // s = +1 gives B^4 = -4/5, which admits no real B.
  const Q b4_minus = Q(1, 4) / (Q(5, 4) + Q(15, 16));
  const Q b4_plus = Q(-1, 4) / (Q(5, 4) - Q(15, 16));
  c.b4_positive_branch = rat(b4_minus) == B4;
  c.rejected_b4_num = b4_plus.numerator();
  c.rejected_b4_den = b4_plus.denominator();
  return c;
}

}  // namespace tfreud
