#include "uinorm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace uinorm::spectral {

namespace {

constexpr double kHermitianGate = 1e-10;

// Threshold below which a negative eigenvalue on a PSD-by-construction path
// counts as roundoff; anything more negative is an error, not a clamp.
constexpr double kPsdClampFactor = 1e-12;

// Eigenvalues of an explicitly formed Gram matrix below this fraction of the
// largest one sit under the formation noise floor; they are exact zeros, and
// flushing them keeps square roots from amplifying eps-level noise to
// sqrt(eps)-level singular values.
constexpr double kGramNoiseFloor = 1e-13;

double off_diagonal_mass(const std::vector<cplx>& h, std::size_t d) {
    double s = 0.0;
    for (std::size_t p = 0; p < d; ++p) {
        for (std::size_t q = p + 1; q < d; ++q) {
            s += std::norm(h[p * d + q]);
        }
    }
    return std::sqrt(2.0 * s);
}

void sort_descending_stable(std::vector<double>& values, std::vector<std::size_t>& order) {
    order.resize(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return values[i] > values[j]; });
    std::vector<double> sorted(values.size());
    for (std::size_t k = 0; k < order.size(); ++k) sorted[k] = values[order[k]];
    values = std::move(sorted);
}

double abs_max(const std::vector<double>& vals) {
    double m = 0.0;
    for (double v : vals) m = std::max(m, std::abs(v));
    return m;
}

// Clamp roundoff-level eigenvalues of a PSD-by-construction matrix at zero;
// error out on genuinely negative ones.
std::vector<double> clamp_psd_eigenvalues(const std::vector<double>& vals, const char* what) {
    const double scale = abs_max(vals);
    const double floor = -kPsdClampFactor * scale;
    const double flush = kGramNoiseFloor * scale;
    std::vector<double> out(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] < floor) {
            std::ostringstream msg;
            msg << what << ": eigenvalue " << vals[i] << " below roundoff floor " << floor;
            throw std::runtime_error(msg.str());
        }
        out[i] = (vals[i] < flush) ? 0.0 : vals[i];
    }
    return out;
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& a, const JacobiOptions& opts) {
    if (!a.is_square()) {
        throw std::invalid_argument("hermitian_eig: matrix " + a.shape() + " is not square");
    }
    const double dev = hermitian_deviation(a);
    if (dev > kHermitianGate) {
        std::ostringstream msg;
        msg << "hermitian_eig: matrix is not Hermitian (deviation " << dev << ")";
        throw std::invalid_argument(msg.str());
    }

    const std::size_t d = a.rows();
    std::vector<cplx> h = hermitian_part(a).entries();
    std::vector<cplx> v(d * d, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < d; ++i) v[i * d + i] = cplx(1.0, 0.0);

    double fro = 0.0;
    for (const cplx& z : h) fro += std::norm(z);
    fro = std::sqrt(fro);

    const double target = opts.convergence_factor * fro;
    // Pivots this small cannot lift the off-diagonal mass above target.
    const double skip = target / (2.0 * static_cast<double>(d));

    double off = off_diagonal_mass(h, d);
    int sweep = 0;
    for (; sweep < opts.max_sweeps && off > target; ++sweep) {
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const cplx b = h[p * d + q];
                const double ab = std::abs(b);
                if (ab <= skip) continue;

                const double alpha = h[p * d + p].real();
                const double beta = h[q * d + q].real();
                const cplx w = std::conj(b) / ab;  // e^{-i phase(b)}

                const double tau = (alpha - beta) / (2.0 * ab);
                const double t =
                    (tau == 0.0) ? 1.0
                                 : (tau > 0.0 ? 1.0 : -1.0) /
                                       (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx sw = s * w;        // applied on the right
                const cplx scw = s * std::conj(w);

                // Rows p and q (left action), mirrored into columns to keep
                // the iterate exactly Hermitian.
                for (std::size_t r = 0; r < d; ++r) {
                    if (r == p || r == q) continue;
                    const cplx x = h[p * d + r];
                    const cplx y = h[q * d + r];
                    h[p * d + r] = c * x + scw * y;
                    h[q * d + r] = -s * x + c * std::conj(w) * y;
                    h[r * d + p] = std::conj(h[p * d + r]);
                    h[r * d + q] = std::conj(h[q * d + r]);
                }
                h[p * d + p] = cplx(alpha + t * ab, 0.0);
                h[q * d + q] = cplx(beta - t * ab, 0.0);
                h[p * d + q] = cplx(0.0, 0.0);
                h[q * d + p] = cplx(0.0, 0.0);

                for (std::size_t r = 0; r < d; ++r) {
                    const cplx x = v[r * d + p];
                    const cplx y = v[r * d + q];
                    v[r * d + p] = c * x + sw * y;
                    v[r * d + q] = -s * x + c * w * y;
                }
            }
        }
        off = off_diagonal_mass(h, d);
    }

    if (off > target) {
        std::ostringstream msg;
        msg << "hermitian_eig: no convergence after " << opts.max_sweeps
            << " sweeps (off-diagonal residual " << off << ", target " << target << ")";
        throw std::runtime_error(msg.str());
    }

    std::vector<double> values(d);
    for (std::size_t i = 0; i < d; ++i) values[i] = h[i * d + i].real();
    std::vector<std::size_t> order;
    sort_descending_stable(values, order);

    std::vector<cplx> vsorted(d * d);
    for (std::size_t k = 0; k < d; ++k) {
        const std::size_t src = order[k];
        for (std::size_t r = 0; r < d; ++r) vsorted[r * d + k] = v[r * d + src];
    }
    return HermitianEig{std::move(values), ComplexMatrix(d, d, std::move(vsorted))};
}

SingularSpectrum singular_values(const ComplexMatrix& a, const JacobiOptions& opts) {
    const ComplexMatrix gram = (a.cols() <= a.rows()) ? multiply(adjoint(a), a)
                                                      : multiply(a, adjoint(a));
    HermitianEig eig = hermitian_eig(gram, opts);
    std::vector<double> vals =
        clamp_psd_eigenvalues(eig.eigenvalues, "singular_values");
    for (double& v : vals) v = std::sqrt(v);
    return SingularSpectrum{std::move(vals)};
}

ComplexMatrix matrix_abs(const ComplexMatrix& a, const JacobiOptions& opts) {
    if (!a.is_square()) {
        throw std::invalid_argument("matrix_abs: matrix " + a.shape() + " is not square");
    }
    HermitianEig eig = hermitian_eig(multiply(adjoint(a), a), opts);
    std::vector<double> vals = clamp_psd_eigenvalues(eig.eigenvalues, "matrix_abs");
    for (double& v : vals) v = std::sqrt(v);
    return reconstruct_hermitian(eig.eigenvectors, vals);
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a, const JacobiOptions& opts) {
    HermitianEig eig = hermitian_eig(a, opts);
    const double scale = abs_max(eig.eigenvalues);
    const double min_eig = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
    if (min_eig < -1e-10 * scale) {
        std::ostringstream msg;
        msg << "psd_sqrt: matrix is not PSD (min eigenvalue " << min_eig << ")";
        throw std::invalid_argument(msg.str());
    }
    std::vector<double> vals(eig.eigenvalues);
    for (double& v : vals) v = std::sqrt(std::max(v, 0.0));
    return reconstruct_hermitian(eig.eigenvectors, vals);
}

PsdVerdict is_psd(const ComplexMatrix& a, double tol, const JacobiOptions& opts) {
    HermitianEig eig = hermitian_eig(a, opts);
    const double min_eig = eig.eigenvalues.back();
    return PsdVerdict{min_eig >= -tol, min_eig};
}

double operator_norm(const ComplexMatrix& a, const JacobiOptions& opts) {
    return singular_values(a, opts).values.front();
}

ComplexMatrix reconstruct_hermitian(const ComplexMatrix& eigenvectors,
                                    const std::vector<double>& eigenvalues) {
    const std::size_t d = eigenvectors.rows();
    if (!eigenvectors.is_square() || eigenvalues.size() != d) {
        throw std::invalid_argument("reconstruct_hermitian: shape mismatch");
    }
    std::vector<cplx> e(d * d, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            cplx s(0.0, 0.0);
            for (std::size_t k = 0; k < d; ++k) {
                s += eigenvectors(i, k) * eigenvalues[k] * std::conj(eigenvectors(j, k));
            }
            e[i * d + j] = s;
        }
    }
    return hermitian_part(ComplexMatrix(d, d, std::move(e)));
}

}  // namespace uinorm::spectral
