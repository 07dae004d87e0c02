#include "tfreud/electro.hpp"

#include <string>

#include "tfreud/errors.hpp"

namespace tfreud {

ExternalField ExternalField::build(const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys, int n) {
  if (n < 1 || n + 1 > tbl.n_max() || n >= static_cast<int>(polys.size())) {
    throw IndexError("external field: degree " + std::to_string(n) + " needs a_{n+1} and P_n");
  }
  const Real p0 = polys[static_cast<size_t>(n)].at_zero();
  return {n, tbl.z(), tbl.b(n), tbl.R(n), p0 * p0 / (4 * tbl.z() * tbl.h(n))};
}

Real ExternalField::value(const Real& x) const {
  if (!(x > 0)) throw DomainError("potential: x must be positive");
  const Real cubic = x * (x * x + b * x + R) + kappa;
  if (cubic.is_zero()) throw DomainError("potential: logarithm of zero");
  const Real x2 = x * x;
  return z * x2 * x2 + log(abs(cubic)) - log(x);
}

Real ExternalField::derivative(const Real& x) const {
  if (!(x > 0)) throw DomainError("potential: x must be positive");
  const Real cubic = x * (x * x + b * x + R) + kappa;
  if (cubic.is_zero()) throw DomainError("potential: logarithm of zero");
  return 4 * z * x * x * x + (3 * x * x + 2 * b * x + R) / cubic - 1 / x;
}

Real ElectroSystem::max_gradient() const {
  Real m(0);
  for (const auto& g : gradient) m = max(m, abs(g));
  return m;
}

ElectroSystem electro_energy(const std::vector<Real>& positions, int n, const RecurrenceTable& tbl,
                             const std::vector<MonicPoly>& polys) {
  if (static_cast<int>(positions.size()) != n) throw DomainError("electro_energy: expected n positions");
  const ExternalField field = ExternalField::build(tbl, polys, n);
  ElectroSystem sys{positions, n, tbl.z(), Real(0), std::vector<Real>(positions.size(), Real(0))};
  for (size_t k = 0; k < positions.size(); ++k) {
    const Real& xk = positions[k];
    sys.energy += field.value(xk);
    sys.gradient[k] += field.derivative(xk);
    for (size_t j = 0; j < k; ++j) {
      const Real d = xk - positions[j];
      if (d.is_zero()) throw DomainError("electro_energy: coincident charges");
      sys.energy -= 2 * log(abs(d));
      const Real f = 2 / d;
      sys.gradient[k] -= f;
      sys.gradient[j] += f;
    }
  }
  return sys;
}

Stationarity stationarity_check(const std::vector<Real>& zeros, int n, const RecurrenceTable& tbl,
                                const std::vector<MonicPoly>& polys, const Real& rel) {
  std::vector<Real> moved = zeros;
  for (size_t k = 0; k < moved.size(); ++k) {
    // Spacing to the nearer neighbour, or to the origin for a lone charge.
    Real gap = zeros[k];
    if (k > 0) gap = min(gap, zeros[k] - zeros[k - 1]);
    if (k + 1 < zeros.size()) gap = min(gap, zeros[k + 1] - zeros[k]);
    const Real step = rel * gap;
    moved[k] += k % 2 == 0 ? step : -step;
  }
  return {electro_energy(zeros, n, tbl, polys).max_gradient(), electro_energy(moved, n, tbl, polys).max_gradient()};
}

Real gradient_fd_error(const std::vector<Real>& positions, int n, const RecurrenceTable& tbl,
                       const std::vector<MonicPoly>& polys, const Real& h) {
  const ElectroSystem base = electro_energy(positions, n, tbl, polys);
  Real worst(0);
  for (size_t k = 0; k < positions.size(); ++k) {
    std::vector<Real> up = positions, down = positions;
    up[k] += h;
    down[k] -= h;
    const Real fd = (electro_energy(up, n, tbl, polys).energy - electro_energy(down, n, tbl, polys).energy) / (2 * h);
    worst = max(worst, abs(fd - base.gradient[k]));
  }
  return worst;
}

Real potential_eval(const Real& x, int n, const RecurrenceTable& tbl, const std::vector<MonicPoly>& polys) {
  return ExternalField::build(tbl, polys, n).value(x);
}

}  // namespace tfreud
