#pragma once
//
// Eigen/singular decompositions and the matrix functions built on them:
// |A| = (A*A)^{1/2}, PSD square roots, PSD tests. The eigensolver is a
// cyclic Jacobi iteration for complex Hermitian matrices.
//

#include <vector>

#include "uinorm/matrix.hpp"

namespace uinorm::spectral {

struct JacobiOptions {
    // Converged when the off-diagonal Frobenius mass drops below
    // convergence_factor * ||A||_F.
    double convergence_factor = 1e-12;
    int max_sweeps = 100;

    JacobiOptions tightened(double factor) const {
        return JacobiOptions{convergence_factor * factor, max_sweeps};
    }
};

struct HermitianEig {
    std::vector<double> eigenvalues;  // descending, stable tie order
    ComplexMatrix eigenvectors;       // unitary; column k pairs with eigenvalues[k]
};

struct SingularSpectrum {
    std::vector<double> values;  // descending, nonnegative, length min(rows, cols)
};

// Requires a square and Hermitian within 1e-10 (max |a[i][j] - conj(a[j][i])|).
// Throws std::runtime_error with the residual if the sweep budget is exhausted.
HermitianEig hermitian_eig(const ComplexMatrix& a, const JacobiOptions& opts = {});

// Square roots of the descending eigenvalues of A*A (or AA*, whichever is
// smaller), clamped at zero.
SingularSpectrum singular_values(const ComplexMatrix& a, const JacobiOptions& opts = {});

// |A| = (A*A)^{1/2} for square A; Hermitian PSD.
ComplexMatrix matrix_abs(const ComplexMatrix& a, const JacobiOptions& opts = {});

// Hermitian PSD square root; input must be Hermitian with min eigenvalue
// >= -1e-10 * ||a||.
ComplexMatrix psd_sqrt(const ComplexMatrix& a, const JacobiOptions& opts = {});

struct PsdVerdict {
    bool psd;
    double min_eigenvalue;
};

// True iff the min eigenvalue of Hermitian a is >= -tol; the witness
// eigenvalue is always returned.
PsdVerdict is_psd(const ComplexMatrix& a, double tol, const JacobiOptions& opts = {});

// Operator norm (largest singular value); here because it is pure spectrum.
double operator_norm(const ComplexMatrix& a, const JacobiOptions& opts = {});

// V * diag(values) * V*, re-Hermitized.
ComplexMatrix reconstruct_hermitian(const ComplexMatrix& eigenvectors,
                                    const std::vector<double>& eigenvalues);

}  // namespace uinorm::spectral
