#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace jacobi_walk {

/// Raised when a numerical routine cannot deliver a result it can vouch for
/// (non-convergence, a bracketing check that fails, a probability far outside [0,1]).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Real>
struct BasicTridiagonalEigen {
  std::vector<Real> values;            // ascending
  std::vector<Real> first_components;  // first component of each unit eigenvector, same order
};

using TridiagonalEigen = BasicTridiagonalEigen<double>;

/// Eigenvalues and first eigenvector components of the symmetric tridiagonal
/// matrix with the given diagonal and off-diagonal (size n and n - 1), by
/// implicit-shift QL. Only the first row of the eigenvector matrix is
/// accumulated, so the cost is O(n^2).
///
/// An off-diagonal entry e_m is deflated once |e_m| <= tol * (|d_m| + |d_{m+1}|).
/// Throws NumericalError if any eigenvalue needs more than max_iterations sweeps.
/// The default tol is the unit roundoff of the working type.
TridiagonalEigen symmetric_tridiagonal_eigen(std::span<const double> diag, std::span<const double> offdiag,
                                             double tol = 0x1.0p-52, int max_iterations = 50);

BasicTridiagonalEigen<long double> symmetric_tridiagonal_eigen(std::span<const long double> diag,
                                                               std::span<const long double> offdiag,
                                                               long double tol = 0x1.0p-63L,
                                                               int max_iterations = 50);

}  // namespace jacobi_walk
