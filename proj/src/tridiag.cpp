#include "tfreud/tridiag.hpp"

#include "tfreud/errors.hpp"

namespace tfreud {

int sturm_count(const std::vector<Real>& diag, const std::vector<Real>& offdiag_sq, const Real& x) {
  const Real tiny = ldexp(Real(1), -4 * static_cast<long>(working_precision()));
  int count = 0;
  Real d(1);
  for (size_t k = 0; k < diag.size(); ++k) {
    d = k == 0 ? diag[0] - x : diag[k] - x - offdiag_sq[k - 1] / d;
    if (d.is_zero()) d = tiny;
    if (d < 0) ++count;
  }
  return count;
}

namespace {

// det(M - x) and its derivative by the three-term determinant recurrence.
void char_poly(const std::vector<Real>& diag, const std::vector<Real>& e2, const Real& x, Real& p, Real& dp) {
  Real p_prev(1), dp_prev(0);
  p = diag[0] - x;
  dp = Real(-1);
  for (size_t k = 1; k < diag.size(); ++k) {
    Real p_next = (diag[k] - x) * p - e2[k - 1] * p_prev;
    Real dp_next = (diag[k] - x) * dp - p - e2[k - 1] * dp_prev;
    p_prev = std::move(p);
    dp_prev = std::move(dp);
    p = std::move(p_next);
    dp = std::move(dp_next);
  }
}

}  // namespace

std::vector<Real> tridiag_eigenvalues_sq(const std::vector<Real>& diag, const std::vector<Real>& offdiag_sq) {
  const size_t n = diag.size();
  if (n == 0) return {};
  if (offdiag_sq.size() + 1 != n) throw ContractViolation("tridiag: off-diagonal must have length n-1");
  for (const auto& e : offdiag_sq) {
    if (!(e > 0)) throw ContractViolation("tridiag: off-diagonal entries must be strictly positive");
  }

  // Gershgorin enclosure.
  Real lo = diag[0], hi = diag[0];
  for (size_t k = 0; k < n; ++k) {
    Real r(0);
    if (k > 0) r += sqrt(offdiag_sq[k - 1]);
    if (k + 1 < n) r += sqrt(offdiag_sq[k]);
    lo = min(lo, diag[k] - r);
    hi = max(hi, diag[k] + r);
  }
  const Real radius = max(abs(lo), abs(hi));
  const long bits = static_cast<long>(working_precision());
  const Real coarse = ldexp(Real(1), -56);
  const Real fine = ldexp(Real(1), 3 - bits);

  std::vector<Real> out;
  out.reserve(n);
  for (size_t k = 0; k < n; ++k) {
    Real a = lo, b = hi;
    // Isolate eigenvalue k: count(a) <= k < count(b).
    while (b - a > coarse * max(max(abs(a), abs(b)), radius * coarse)) {
      Real mid = (a + b) / 2;
      if (sturm_count(diag, offdiag_sq, mid) > static_cast<int>(k)) b = mid; else a = mid;
    }
    Real x = (a + b) / 2;
    bool ok = false;
    Real last_step;
    for (int it = 0; it < 200; ++it) {
      Real p, dp;
      char_poly(diag, offdiag_sq, x, p, dp);
      if (p.is_zero()) { ok = true; break; }
      if (dp.is_zero()) break;
      Real step = p / dp;
      Real next = x - step;
      if (next < a || next > b) break;
      x = std::move(next);
      const Real s = abs(step);
      if (s <= fine * max(abs(x), radius * coarse)) { ok = true; break; }
      if (it > 8 && s >= last_step) { ok = true; break; }  // rounding floor
      last_step = s;
    }
    if (!ok) {
      // Newton left the bracket: finish by bisection.
      while (b - a > fine * max(max(abs(a), abs(b)), radius * coarse)) {
        Real mid = (a + b) / 2;
        if (mid == a || mid == b) break;
        if (sturm_count(diag, offdiag_sq, mid) > static_cast<int>(k)) b = mid; else a = mid;
      }
      x = (a + b) / 2;
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Real> tridiag_eigenvalues(const std::vector<Real>& diag, const std::vector<Real>& offdiag) {
  if (!diag.empty() && offdiag.size() + 1 != diag.size()) {
    throw ContractViolation("tridiag: off-diagonal must have length n-1");
  }
  std::vector<Real> e2;
  e2.reserve(offdiag.size());
  for (const auto& e : offdiag) {
    if (!(e > 0)) throw ContractViolation("tridiag: off-diagonal entries must be strictly positive");
    e2.push_back(e * e);
  }
  return tridiag_eigenvalues_sq(diag, e2);
}

}  // namespace tfreud
