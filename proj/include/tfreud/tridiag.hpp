#ifndef TFREUD_TRIDIAG_HPP
#define TFREUD_TRIDIAG_HPP

#include <vector>

#include "tfreud/real.hpp"

namespace tfreud {

/// Eigenvalues of the symmetric tridiagonal matrix with the given diagonal and
/// strictly positive off-diagonal, ascending, at the working precision.
/// Sturm-count bisection isolates each eigenvalue, Newton on the determinant
/// recurrence finishes it. Throws ContractViolation on a non-positive or
/// mis-sized off-diagonal.
std::vector<Real> tridiag_eigenvalues(const std::vector<Real>& diag, const std::vector<Real>& offdiag);

/// Same, taking the squared off-diagonal directly. For a Jacobi matrix these
/// are the recurrence coefficients a_k, so no square roots are needed.
std::vector<Real> tridiag_eigenvalues_sq(const std::vector<Real>& diag, const std::vector<Real>& offdiag_sq);

/// Number of eigenvalues strictly below x.
int sturm_count(const std::vector<Real>& diag, const std::vector<Real>& offdiag_sq, const Real& x);

}  // namespace tfreud

#endif  // TFREUD_TRIDIAG_HPP
