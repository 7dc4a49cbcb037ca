#pragma once

#include <cstddef>

#include "specgnn/dense.hpp"

namespace specgnn::linalg {

// Eigendecomposition of a symmetric matrix: L = U diag(lambda) U^T.
// Eigenvalues ascending; column j of eigenvectors pairs with eigenvalues[j].
// Gauge convention: in each eigenvector the first component with
// |value| > 1e-12 is non-negative.
struct EigenSystem {
    DenseVector eigenvalues;
    DenseMatrix eigenvectors;  // n x n, columns orthonormal

    std::size_t n() const { return eigenvalues.size(); }
};

// The q = num_smallest + num_largest extreme eigenpairs of a parent system,
// order preserved (smallest block ascending, then largest block ascending).
struct TruncatedEigenSystem {
    DenseVector eigenvalues;
    DenseMatrix eigenvectors;  // n x q
    std::size_t num_smallest = 0;
    std::size_t num_largest = 0;

    std::size_t q() const { return eigenvalues.size(); }
    std::size_t n() const { return eigenvectors.rows(); }
};

// Householder tridiagonalization followed by implicit-shift QL with Wilkinson
// shifts. Deterministic: identical input bits give identical output bits.
// pre: m square, symmetric within 1e-10 * max(1, |m|_max); the solver works on
// (M + M^T)/2. Throws on non-square/asymmetric input and on failure to
// converge within 64*n implicit-shift iterations.
EigenSystem symmetric_eig(const DenseMatrix& m);

TruncatedEigenSystem truncate_spectrum(const EigenSystem& e, std::size_t num_smallest,
                                       std::size_t num_largest);

// U diag(new_eigenvalues) (U^T x) without materializing the n x n operator.
DenseMatrix spectral_apply(const DenseMatrix& eigenvectors, const DenseVector& new_eigenvalues,
                           const DenseMatrix& x);
DenseMatrix spectral_apply(const EigenSystem& e, const DenseVector& new_eigenvalues,
                           const DenseMatrix& x);
DenseMatrix spectral_apply(const TruncatedEigenSystem& e, const DenseVector& new_eigenvalues,
                           const DenseMatrix& x);

}  // namespace specgnn::linalg
