#include "tfreud/moments.hpp"

#include <algorithm>
#include <string>

#include "tfreud/errors.hpp"
#include "tfreud/special.hpp"

namespace tfreud {

Real moment(int n, const Real& z) {
  if (!(z > 0)) throw DomainError("moment: z must be positive");
  if (n < 0) throw DomainError("moment: negative index");
  const Real q = Real(n + 1) / 4;
  return pow(z, -q) * gamma(q) / 4;
}

MomentSequence::MomentSequence(const Real& z, int N) : z_(z) {
  if (!(z > 0)) throw DomainError("moment sequence: z must be positive");
  if (N < 0) throw DomainError("moment sequence: negative length");
  mu_.reserve(static_cast<size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) mu_.push_back(moment(n, z));
}

const Real& MomentSequence::at(int n) const {
  if (n < 0 || n > max_index()) {
    throw IndexError("moment index " + std::to_string(n) + " outside 0.." + std::to_string(max_index()));
  }
  return mu_[static_cast<size_t>(n)];
}

Residual moment_recurrence_residual(const MomentSequence& mseq, int n) {
  const Real lhs = 4 * mseq.z() * mseq.at(n + 4);
  const Real rhs = (n + 1) * mseq.at(n);
  return {lhs - rhs, abs(lhs) + abs(rhs)};
}

Residual moment_scaling_residual(int n, const Real& z) {
  const Real scaled = moment(n, z) * pow(z, Real(n + 1) / 4);
  const Real base = moment(n, Real(1));
  return {scaled - base, abs(scaled) + abs(base)};
}

Real moment_dz_residual(int n, const Real& z, const Real& h) {
  const Real d = (moment(n, z + h) - moment(n, z - h)) / (2 * h);
  return 4 * z * d + (n + 1) * moment(n, z);
}

PearsonData PearsonData::for_z(const Real& z) {
  PearsonData p;
  p.phi = Poly::monomial(1);
  p.psi = Poly({Real(-1), Real(0), Real(0), Real(0), 4 * z});
  p.cls = std::max(p.phi.degree() - 2, p.psi.degree() - 1);
  return p;
}

ClassCheck class_check(const Real& z) {
  const PearsonData pd = PearsonData::for_z(z);
  const Real c(0);
  const Real first = abs(pd.psi.eval(c) + poly_diff(pd.phi).eval(c));

  // theta_c f = (f(x) - f(c)) / (x - c) by synthetic division.
  auto theta = [&c](const Poly& f) {
    const auto& a = f.coeffs();
    if (a.size() <= 1) return Poly();
    std::vector<Real> q(a.size() - 1);
    Real carry(0);
    for (size_t k = a.size() - 1; k >= 1; --k) {
      carry = carry * c + a[k];
      q[k - 1] = carry;
    }
    return Poly(std::move(q));
  };
  const Poly r = theta(pd.psi) + theta(theta(pd.phi));
  const MomentSequence mu(z, std::max(r.degree(), 0));
  Real pairing(0);
  for (int k = 0; k <= r.degree(); ++k) pairing += r.coeff(k) * mu[k];

  const Real product = first + abs(pairing);
  return {product > 0 ? pd.cls : pd.cls - 1, product};
}

Real stieltjes_partial(const Real& t, const Real& z, int N) {
  if (t.is_zero()) throw DomainError("stieltjes: t = 0");
  const MomentSequence mu(z, N);
  Real sum(0);
  Real tp = t;
  for (int n = 0; n <= N; ++n) {
    sum += mu[n] / tp;
    tp *= t;
  }
  return sum;
}

Real stieltjes_ode_residual(const Real& t, const Real& z, int N) {
  if (t.is_zero()) throw DomainError("stieltjes: t = 0");
  if (N < 3) throw DomainError("stieltjes ODE needs N >= 3");
  const MomentSequence mu(z, N);
  Real s(0), ds(0);
  Real tp = t;
  for (int n = 0; n <= N; ++n) {
    s += mu[n] / tp;
    ds -= (n + 1) * mu[n] / (tp * t);
    tp *= t;
  }
  const Real t2 = t * t;
  const Real inhom = 4 * z * (mu[3] + t * mu[2] + t2 * mu[1] + t2 * t * mu[0]);
  return t * ds + 4 * z * t2 * t2 * s - inhom;
}

Real stieltjes_tail(const Real& t, const Real& z, int N) {
  if (t.is_zero()) throw DomainError("stieltjes: t = 0");
  if (N < 3) throw DomainError("stieltjes ODE needs N >= 3");
  const MomentSequence mu(z, N);
  Real tail(0);
  for (int n = N - 3; n <= N; ++n) tail -= (n + 1) * mu[n] / pow(t, static_cast<long>(n + 1));
  return tail;
}

}  // namespace tfreud
