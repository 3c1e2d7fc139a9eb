#include "uinorm/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace uinorm {

namespace {

void check_positive_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("matrix shape must be positive, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    }
}

void check_finite(const std::vector<cplx>& entries) {
    for (const cplx& z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::domain_error("matrix entry is not finite");
        }
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, cplx(0.0, 0.0)) {
    check_positive_shape(rows, cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    check_positive_shape(rows, cols);
    if (entries_.size() != rows * cols) {
        throw std::invalid_argument("entries length " + std::to_string(entries_.size()) +
                                    " does not match shape " + shape());
    }
    check_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
    ComplexMatrix m(d, d);
    std::vector<cplx> e(d * d, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < d; ++i) e[i * d + i] = cplx(1.0, 0.0);
    return ComplexMatrix(d, d, std::move(e));
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& diag) {
    const std::size_t d = diag.size();
    std::vector<cplx> e(d * d, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < d; ++i) e[i * d + i] = diag[i];
    return ComplexMatrix(d, d, std::move(e));
}

std::string ComplexMatrix::shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    std::vector<cplx> e(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            e[j * a.rows() + i] = std::conj(a(i, j));
        }
    }
    return ComplexMatrix(a.cols(), a.rows(), std::move(e));
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("cannot multiply " + a.shape() + " by " + b.shape());
    }
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    std::vector<cplx> e(m * n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            const cplx ail = a(i, l);
            if (ail == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                e[i * n + j] += ail * b(l, j);
            }
        }
    }
    return ComplexMatrix(m, n, std::move(e));
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("cannot add " + a.shape() + " and " + b.shape());
    }
    std::vector<cplx> e(a.entries());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
    return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("cannot subtract " + b.shape() + " from " + a.shape());
    }
    std::vector<cplx> e(a.entries());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries()[i];
    return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

ComplexMatrix scale(const ComplexMatrix& a, cplx c) {
    std::vector<cplx> e(a.entries());
    for (cplx& z : e) z *= c;
    return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& parts) {
    if (parts.empty()) {
        throw std::invalid_argument("direct_sum of an empty list");
    }
    std::size_t rows = 0, cols = 0;
    for (const ComplexMatrix& p : parts) {
        rows += p.rows();
        cols += p.cols();
    }
    std::vector<cplx> e(rows * cols, cplx(0.0, 0.0));
    std::size_t r0 = 0, c0 = 0;
    for (const ComplexMatrix& p : parts) {
        for (std::size_t i = 0; i < p.rows(); ++i) {
            for (std::size_t j = 0; j < p.cols(); ++j) {
                e[(r0 + i) * cols + (c0 + j)] = p(i, j);
            }
        }
        r0 += p.rows();
        c0 += p.cols();
    }
    return ComplexMatrix(rows, cols, std::move(e));
}

ComplexMatrix pad_top_left(const ComplexMatrix& a, std::size_t rows, std::size_t cols) {
    if (rows < a.rows() || cols < a.cols()) {
        throw std::invalid_argument("cannot pad " + a.shape() + " into " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    }
    std::vector<cplx> e(rows * cols, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            e[i * cols + j] = a(i, j);
        }
    }
    return ComplexMatrix(rows, cols, std::move(e));
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const cplx& z : a.entries()) s += std::norm(z);
    return std::sqrt(s);
}

cplx trace(const ComplexMatrix& a) {
    if (!a.is_square()) {
        throw std::invalid_argument("trace of non-square matrix " + a.shape());
    }
    cplx t(0.0, 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

double hermitian_deviation(const ComplexMatrix& a) {
    if (!a.is_square()) {
        throw std::invalid_argument("hermitian_deviation of non-square matrix " + a.shape());
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            dev = std::max(dev, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return dev;
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
    if (!a.is_square()) {
        throw std::invalid_argument("hermitian_part of non-square matrix " + a.shape());
    }
    const std::size_t d = a.rows();
    std::vector<cplx> e(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            e[i * d + j] = 0.5 * (a(i, j) + std::conj(a(j, i)));
        }
    }
    return ComplexMatrix(d, d, std::move(e));
}

BlockGrid::BlockGrid(std::size_t block_rows, std::size_t block_cols,
                     std::vector<ComplexMatrix> blocks)
    : block_rows_(block_rows), block_cols_(block_cols), blocks_(std::move(blocks)) {
    check_positive_shape(block_rows_, block_cols_);
    if (blocks_.size() != block_rows_ * block_cols_) {
        throw std::invalid_argument("block grid needs " +
                                    std::to_string(block_rows_ * block_cols_) +
                                    " blocks, got " + std::to_string(blocks_.size()));
    }
    for (std::size_t i = 0; i < block_rows_; ++i) {
        for (std::size_t j = 0; j < block_cols_; ++j) {
            const ComplexMatrix& b = block(i, j);
            if (b.rows() != block(i, 0).rows()) {
                throw std::invalid_argument("inconsistent block heights in grid row " +
                                            std::to_string(i));
            }
            if (b.cols() != block(0, j).cols()) {
                throw std::invalid_argument("inconsistent block widths in grid column " +
                                            std::to_string(j));
            }
        }
    }
}

BlockGrid BlockGrid::from_rows(const std::vector<std::vector<ComplexMatrix>>& rows) {
    if (rows.empty() || rows.front().empty()) {
        throw std::invalid_argument("block grid must be non-empty");
    }
    const std::size_t bc = rows.front().size();
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(rows.size() * bc);
    for (const auto& r : rows) {
        if (r.size() != bc) {
            throw std::invalid_argument("ragged block grid rows");
        }
        for (const auto& b : r) blocks.push_back(b);
    }
    return BlockGrid(rows.size(), bc, std::move(blocks));
}

std::size_t BlockGrid::total_rows() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < block_rows_; ++i) r += block(i, 0).rows();
    return r;
}

std::size_t BlockGrid::total_cols() const {
    std::size_t c = 0;
    for (std::size_t j = 0; j < block_cols_; ++j) c += block(0, j).cols();
    return c;
}

ComplexMatrix assemble(const BlockGrid& grid) {
    const std::size_t rows = grid.total_rows();
    const std::size_t cols = grid.total_cols();
    std::vector<cplx> e(rows * cols, cplx(0.0, 0.0));
    std::size_t r0 = 0;
    for (std::size_t bi = 0; bi < grid.block_rows(); ++bi) {
        std::size_t c0 = 0;
        for (std::size_t bj = 0; bj < grid.block_cols(); ++bj) {
            const ComplexMatrix& b = grid.block(bi, bj);
            for (std::size_t i = 0; i < b.rows(); ++i) {
                for (std::size_t j = 0; j < b.cols(); ++j) {
                    e[(r0 + i) * cols + (c0 + j)] = b(i, j);
                }
            }
            c0 += b.cols();
        }
        r0 += grid.block(bi, 0).rows();
    }
    return ComplexMatrix(rows, cols, std::move(e));
}

ComplexMatrix assemble(const std::vector<std::vector<ComplexMatrix>>& rows) {
    return assemble(BlockGrid::from_rows(rows));
}

}  // namespace uinorm
