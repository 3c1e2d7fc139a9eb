#pragma once
//
// Dense complex matrices and the structural algebra used throughout:
// adjoints, products, sums, direct sums, block assembly, zero padding.
// Matrices are immutable values; every operation returns a new matrix.
//

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace uinorm {

using cplx = std::complex<double>;

class ComplexMatrix {
public:
    // Zero matrix of the given shape.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    // Row-major entries; length must equal rows*cols and all components
    // must be finite.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t d);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);
    static ComplexMatrix diagonal(const std::vector<cplx>& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::string shape() const;

    const cplx& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    const std::vector<cplx>& entries() const { return entries_; }

    // Exact bitwise equality of shapes and entries.
    bool operator==(const ComplexMatrix& other) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<cplx> entries_;
};

ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, cplx c);

// Block-diagonal matrix with the parts on the diagonal, in order.
ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& parts);

// The source embedded in the top-left corner of a rows x cols zero matrix.
ComplexMatrix pad_top_left(const ComplexMatrix& a, std::size_t rows, std::size_t cols);

double frobenius_norm(const ComplexMatrix& a);
cplx trace(const ComplexMatrix& a);

// Max |a[i][j] - conj(a[j][i])| over all entries; 0 for exactly Hermitian.
double hermitian_deviation(const ComplexMatrix& a);

// (A + A*)/2, requires a square.
ComplexMatrix hermitian_part(const ComplexMatrix& a);

// Grid of blocks with consistent per-row heights and per-column widths.
class BlockGrid {
public:
    // blocks in row-major grid order, length block_rows*block_cols.
    BlockGrid(std::size_t block_rows, std::size_t block_cols,
              std::vector<ComplexMatrix> blocks);

    static BlockGrid from_rows(const std::vector<std::vector<ComplexMatrix>>& rows);

    std::size_t block_rows() const { return block_rows_; }
    std::size_t block_cols() const { return block_cols_; }
    const ComplexMatrix& block(std::size_t i, std::size_t j) const {
        return blocks_[i * block_cols_ + j];
    }
    std::size_t total_rows() const;
    std::size_t total_cols() const;

private:
    std::size_t block_rows_;
    std::size_t block_cols_;
    std::vector<ComplexMatrix> blocks_;
};

// Flat matrix with blocks placed contiguously. For a diagonal grid this
// equals direct_sum of the diagonal blocks, bit-exact.
ComplexMatrix assemble(const BlockGrid& grid);

// Convenience: assemble directly from nested rows of blocks.
ComplexMatrix assemble(const std::vector<std::vector<ComplexMatrix>>& rows);

}  // namespace uinorm
