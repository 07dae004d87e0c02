#ifndef TFREUD_MOMENTS_HPP
#define TFREUD_MOMENTS_HPP

#include <vector>

#include "tfreud/polynomial.hpp"
#include "tfreud/real.hpp"
#include "tfreud/tracked.hpp"

namespace tfreud {

/// mu_n(z) = z^{-(n+1)/4} Gamma((n+1)/4) / 4, at the working precision.
/// Throws DomainError for z <= 0 or n < 0.
Real moment(int n, const Real& z);

/// mu_0..mu_N for a fixed z.
class MomentSequence {
 public:
  MomentSequence(const Real& z, int N);

  const Real& z() const { return z_; }
  int max_index() const { return static_cast<int>(mu_.size()) - 1; }
  /// Throws IndexError outside 0..N.
  const Real& at(int n) const;
  const Real& operator[](int n) const { return mu_[static_cast<size_t>(n)]; }
  const std::vector<Real>& values() const { return mu_; }

 private:
  Real z_;
  std::vector<Real> mu_;
};

/// 4z mu_{n+4} - (n+1) mu_n, judged against the size of either side.
Residual moment_recurrence_residual(const MomentSequence& mseq, int n);

/// mu_n(z) z^{(n+1)/4} - mu_n(1).
Residual moment_scaling_residual(int n, const Real& z);

/// 4z d/dz mu_n + (n+1) mu_n with a central difference of step h.
Real moment_dz_residual(int n, const Real& z, const Real& h);

/// D(phi u) + psi u = 0 with phi = x, psi = 4z x^4 - 1.
struct PearsonData {
  Poly phi;
  Poly psi;
  int cls;

  static PearsonData for_z(const Real& z);
};

struct ClassCheck {
  int cls;
  /// |psi(0) + phi'(0)| + |<u, theta_0 psi + theta_0^2 phi>|
  Real product;
};

/// Evaluates the reducibility product at the root c = 0 of phi.
ClassCheck class_check(const Real& z);

/// sum_{n=0}^{N} mu_n(z) / t^{n+1}. Throws DomainError for t = 0.
Real stieltjes_partial(const Real& t, const Real& z, int N);

/// t S_N' + 4z t^4 S_N - 4z(mu_3 + t mu_2 + t^2 mu_1 + t^3 mu_0) for the
/// truncated series S_N, N >= 3.
Real stieltjes_ode_residual(const Real& t, const Real& z, int N);

/// The four surviving tail terms -sum_{n=N-3}^{N} (n+1) mu_n t^{-n-1}.
Real stieltjes_tail(const Real& t, const Real& z, int N);

}  // namespace tfreud

#endif  // TFREUD_MOMENTS_HPP
