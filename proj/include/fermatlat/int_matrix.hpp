#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fermat {

/// Dense row-major matrix over Z with arbitrary-precision entries.
///
/// All arithmetic is exact; there is no overflow path anywhere in the
/// toolkit. Zero-sized matrices (0 rows and/or 0 columns) are legal and
/// show up naturally as empty kernel bases.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }
    const mpz_class& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    mpz_class* row_data(std::size_t i) { return entries_.data() + i * cols_; }
    const mpz_class* row_data(std::size_t i) const {
        return entries_.data() + i * cols_;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;

    IntMatrix transposed() const;

    /// Rows [r0, r1) as a new matrix.
    IntMatrix row_slice(std::size_t r0, std::size_t r1) const;

    void swap_rows(std::size_t i, std::size_t j);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> entries_;
};

/// Exact product a*b. Throws std::invalid_argument on shape mismatch.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// x * psi * x^T. Symmetric whenever psi is.
IntMatrix congruent_transform(const IntMatrix& x, const IntMatrix& psi);

/// Rows of a stacked on top of rows of b (same column count).
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

}  // namespace fermat
