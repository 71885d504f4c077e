#pragma once

#include <cstdint>
#include <vector>

#include "qchan/matrix.hpp"
#include "qchan/rng.hpp"

namespace qchan {

/// Singular values in descending order (one-sided Jacobi; high relative
/// accuracy, which the rank thresholding below depends on).
std::vector<double> singular_values(const ComplexMatrix& a);

struct Svd {
  ComplexMatrix u;               // m x r, orthonormal columns (r = min(m,n))
  std::vector<double> sigma;     // descending
  ComplexMatrix v;               // n x r, orthonormal columns
};

/// Full thin SVD, a = u * diag(sigma) * adjoint(v).
Svd svd(const ComplexMatrix& a);

/// Count of singular values strictly above rel_tol * sigma_max * max(rows,
/// cols).  Zero matrices have rank 0.
int numeric_rank(const ComplexMatrix& a, double rel_tol = kRankTol);

struct Eigh {
  std::vector<double> values;    // descending
  ComplexMatrix vectors;         // columns are eigenvectors
};

/// Eigendecomposition of a Hermitian matrix (cyclic complex Jacobi).
/// The input is symmetrized as (a + adjoint(a))/2 before iterating.
Eigh hermitian_eig(const ComplexMatrix& a);

/// Lower-triangular L with L * adjoint(L) = a.  Throws NotHermitian when the
/// asymmetry exceeds tol and NotPositiveDefinite when a pivot is <= tol.
ComplexMatrix cholesky_factor(const ComplexMatrix& a, double tol = kEqTol);

/// Unitary factor of the polar decomposition (nearest unitary in Frobenius
/// norm).  Throws SingularInput when a is rank-deficient at 1e-12.
ComplexMatrix polar_unitary(const ComplexMatrix& a);

/// Haar-distributed d x d unitary: QR of a complex Gaussian matrix with the
/// R-diagonal phases folded into Q.  Deterministic per rng state.
ComplexMatrix haar_unitary(int d, Rng& rng);
ComplexMatrix haar_unitary(int d, std::uint64_t seed);

}  // namespace qchan
