#include "fermatlat/int_matrix.hpp"

#include <algorithm>
#include <utility>

namespace fermat {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

IntMatrix IntMatrix::row_slice(std::size_t r0, std::size_t r1) const {
    if (r0 > r1 || r1 > rows_)
        throw std::invalid_argument("row_slice: bad range");
    IntMatrix m(r1 - r0, cols_);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i - r0, j) = (*this)(i, j);
    return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap_ranges(row_data(i), row_data(i) + cols_, row_data(j));
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " * " +
                                    std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()));
    IntMatrix c(a.rows(), b.cols());
    const std::size_t n = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        mpz_class* ci = c.row_data(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const mpz_class& aik = a(i, k);
            if (aik == 0) continue;  // intersection matrices are zero-heavy
            const mpz_class* bk = b.row_data(k);
            if (aik == 1) {
                for (std::size_t j = 0; j < n; ++j)
                    if (bk[j] != 0)
                        mpz_add(ci[j].get_mpz_t(), ci[j].get_mpz_t(), bk[j].get_mpz_t());
            } else if (aik == -1) {
                for (std::size_t j = 0; j < n; ++j)
                    if (bk[j] != 0)
                        mpz_sub(ci[j].get_mpz_t(), ci[j].get_mpz_t(), bk[j].get_mpz_t());
            } else {
                for (std::size_t j = 0; j < n; ++j)
                    if (bk[j] != 0)
                        mpz_addmul(ci[j].get_mpz_t(), aik.get_mpz_t(), bk[j].get_mpz_t());
            }
        }
    }
    return c;
}

IntMatrix congruent_transform(const IntMatrix& x, const IntMatrix& psi) {
    if (psi.rows() != psi.cols() || x.cols() != psi.rows())
        throw std::invalid_argument("congruent_transform: dimension mismatch");
    return multiply(multiply(x, psi), x.transposed());
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("vstack: column mismatch");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

}  // namespace fermat
