#pragma once

#include <span>
#include <vector>

#include "dicke/matrix.hpp"

namespace dicke {

// Eigendecomposition of the real symmetric tridiagonal matrix with zero
// diagonal and off-diagonal `off` (length n-1, matrix dimension n).
//
// Implicit-shift QL with eigenvector accumulation. On return `eval` holds
// the eigenvalues sorted ascending and column j of `evec` the matching
// eigenvector, with the first nonzero component of each column positive so
// results are reproducible bit-for-bit.
//
// Convergence test is relative, |e_m| <= 1e-14 (|d_m| + |d_{m+1}|); the
// total rotation-sweep budget is 50*n, exceeded only on pathological input,
// in which case NumericalFailure is thrown.
void tridiag_eig_zero_diag(std::span<const double> off,
                           std::vector<double>& eval, RMat& evec);

}  // namespace dicke
