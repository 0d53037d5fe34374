#include "fermatlat/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace fermat {

namespace {

// row[j] -= q * pivot_row[j] for j in [c0, cols), with fast paths for
// q = +-1. Raw mpz calls here: this is the inner loop of the whole
// toolkit and mpz_class temporaries would dominate the runtime.
void row_submul(mpz_class* row, const mpz_class* pivot_row, const mpz_class& q,
                std::size_t c0, std::size_t cols) {
    if (q == 1) {
        for (std::size_t j = c0; j < cols; ++j)
            if (pivot_row[j] != 0)
                mpz_sub(row[j].get_mpz_t(), row[j].get_mpz_t(), pivot_row[j].get_mpz_t());
    } else if (q == -1) {
        for (std::size_t j = c0; j < cols; ++j)
            if (pivot_row[j] != 0)
                mpz_add(row[j].get_mpz_t(), row[j].get_mpz_t(), pivot_row[j].get_mpz_t());
    } else {
        for (std::size_t j = c0; j < cols; ++j)
            if (pivot_row[j] != 0)
                mpz_submul(row[j].get_mpz_t(), q.get_mpz_t(), pivot_row[j].get_mpz_t());
    }
}

void row_add(mpz_class* row, const mpz_class* other, std::size_t c0, std::size_t cols) {
    for (std::size_t j = c0; j < cols; ++j)
        if (other[j] != 0)
            mpz_add(row[j].get_mpz_t(), row[j].get_mpz_t(), other[j].get_mpz_t());
}

void negate_row(mpz_class* row, std::size_t c0, std::size_t cols) {
    for (std::size_t j = c0; j < cols; ++j)
        if (row[j] != 0) mpz_neg(row[j].get_mpz_t(), row[j].get_mpz_t());
}

// Smallest-|entry| nonzero position in s[k.., k..]; early exit on a unit.
bool find_pivot(const IntMatrix& s, std::size_t k, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    mpz_class best;
    for (std::size_t i = k; i < s.rows(); ++i) {
        const mpz_class* row = s.row_data(i);
        for (std::size_t j = k; j < s.cols(); ++j) {
            const mpz_class& e = row[j];
            if (e == 0) continue;
            if (mpz_cmpabs_ui(e.get_mpz_t(), 1) == 0) {
                pi = i;
                pj = j;
                return true;
            }
            if (!found || mpz_cmpabs(e.get_mpz_t(), best.get_mpz_t()) < 0) {
                best = e;
                pi = i;
                pj = j;
                found = true;
            }
        }
    }
    return found;
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b, std::size_t r0) {
    if (a == b) return;
    for (std::size_t i = r0; i < m.rows(); ++i) mpz_swap(m(i, a).get_mpz_t(), m(i, b).get_mpz_t());
}

}  // namespace

SmithDecomposition smith_decomposition(const IntMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0)
        throw std::invalid_argument("smith_decomposition: empty matrix");

    const std::size_t m = a.rows(), n = a.cols();
    SmithDecomposition dec;
    dec.s = a;
    dec.u = IntMatrix::identity(m);
    dec.t = IntMatrix::identity(n);
    IntMatrix& s = dec.s;
    IntMatrix& u = dec.u;
    IntMatrix& t = dec.t;

    const std::size_t nmin = std::min(m, n);
    std::size_t rank = 0;

    for (std::size_t k = 0; k < nmin; ++k) {
        std::size_t pi, pj;
        if (!find_pivot(s, k, pi, pj)) break;  // remaining block is zero

        for (;;) {
            s.swap_rows(k, pi);
            u.swap_rows(k, pi);
            swap_cols(s, k, pj, k);
            swap_cols(t, k, pj, 0);

            const mpz_class& pivot = s(k, k);
            bool dirty = false;

            // Clear column k below the pivot.
            for (std::size_t i = k + 1; i < m; ++i) {
                if (s(i, k) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), s(i, k).get_mpz_t(), pivot.get_mpz_t());
                if (q != 0) {
                    row_submul(s.row_data(i), s.row_data(k), q, k, n);
                    row_submul(u.row_data(i), u.row_data(k), q, 0, m);
                }
                if (s(i, k) != 0) dirty = true;  // remainder: pivot shrinks next pass
            }
            if (dirty) {
                if (!find_pivot(s, k, pi, pj))
                    throw std::logic_error("smith: pivot vanished");
                continue;
            }

            // Clear row k right of the pivot.
            for (std::size_t j = k + 1; j < n; ++j) {
                if (s(k, j) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), s(k, j).get_mpz_t(), pivot.get_mpz_t());
                if (q != 0) {
                    for (std::size_t i = k; i < m; ++i)
                        if (s(i, k) != 0)
                            mpz_submul(s(i, j).get_mpz_t(), q.get_mpz_t(), s(i, k).get_mpz_t());
                    for (std::size_t i = 0; i < n; ++i)
                        if (t(i, k) != 0)
                            mpz_submul(t(i, j).get_mpz_t(), q.get_mpz_t(), t(i, k).get_mpz_t());
                }
                if (s(k, j) != 0) dirty = true;
            }
            if (dirty) {
                if (!find_pivot(s, k, pi, pj))
                    throw std::logic_error("smith: pivot vanished");
                continue;
            }

            // Divisibility fixup: the pivot must divide the remaining
            // block, otherwise pull an offending row up and re-reduce.
            if (mpz_cmpabs_ui(pivot.get_mpz_t(), 1) != 0) {
                bool offender = false;
                for (std::size_t i = k + 1; i < m && !offender; ++i) {
                    const mpz_class* row = s.row_data(i);
                    for (std::size_t j = k + 1; j < n; ++j) {
                        if (row[j] == 0) continue;
                        if (!mpz_divisible_p(row[j].get_mpz_t(), pivot.get_mpz_t())) {
                            row_add(s.row_data(k), s.row_data(i), k, n);
                            row_add(u.row_data(k), u.row_data(i), 0, m);
                            offender = true;
                            break;
                        }
                    }
                }
                if (offender) {
                    pi = k;
                    pj = k;
                    continue;
                }
            }
            break;
        }

        if (s(k, k) < 0) {
            negate_row(s.row_data(k), k, n);
            negate_row(u.row_data(k), 0, m);
        }
        ++rank;
    }

    dec.rank = rank;
    dec.divisors.reserve(rank);
    for (std::size_t k = 0; k < rank; ++k) dec.divisors.push_back(s(k, k));
    return dec;
}

std::vector<mpz_class> elementary_divisors(const IntMatrix& a) {
    return smith_decomposition(a).divisors;
}

IntMatrix left_kernel_basis(const IntMatrix& a) {
    SmithDecomposition dec = smith_decomposition(a);
    // Rows of u beyond the rank span the saturated left kernel: u*a has
    // them as its zero rows and u is a basis change of Z^rows.
    return dec.u.row_slice(dec.rank, a.rows());
}

namespace {

constexpr std::uint64_t kSignPrime = 2147483647;  // 2^31 - 1

// Entries reduced into [0, p); p must fit in 32 bits so products stay
// within 64 bits.
std::vector<std::uint64_t> reduce_mod(const IntMatrix& m, std::uint64_t p) {
    std::vector<std::uint64_t> r(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const mpz_class* row = m.row_data(i);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::uint64_t v = mpz_fdiv_ui(row[j].get_mpz_t(), p);
            r[i * m.cols() + j] = v;
        }
    }
    return r;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = (unsigned __int128)r * b % p;
        b = (unsigned __int128)b * b % p;
        e >>= 1;
    }
    return r;
}

// Determinant of a square matrix mod p by elimination.
std::uint64_t det_mod(std::vector<std::uint64_t> w, std::size_t n, std::uint64_t p) {
    std::uint64_t det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && w[piv * n + k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(w[k * n + j], w[piv * n + j]);
            det = p - det;
            if (det == p) det = 0;
        }
        const std::uint64_t pk = w[k * n + k];
        det = (unsigned __int128)det * pk % p;
        const std::uint64_t inv = pow_mod(pk, p - 2, p);
        for (std::size_t i = k + 1; i < n; ++i) {
            const std::uint64_t f = (unsigned __int128)w[i * n + k] * inv % p;
            if (f == 0) continue;
            for (std::size_t j = k; j < n; ++j) {
                std::uint64_t sub = (unsigned __int128)f * w[k * n + j] % p;
                w[i * n + j] = (w[i * n + j] + p - sub) % p;
            }
        }
    }
    return det % p;
}

}  // namespace

int unimodular_sign(const IntMatrix& u) {
    if (!u.is_square())
        throw std::invalid_argument("unimodular_sign: matrix not square");
    if (u.rows() == 0) return +1;
    const std::uint64_t p = kSignPrime;
    const std::uint64_t d = det_mod(reduce_mod(u, p), u.rows(), p);
    if (d == 1) return +1;
    if (d == p - 1) return -1;
    throw std::runtime_error("unimodular_sign: determinant is not +-1 mod p");
}

bool verify_decomposition_mod(const IntMatrix& a, const SmithDecomposition& dec,
                              std::uint64_t p) {
    const std::size_t m = a.rows(), n = a.cols();
    if (dec.u.rows() != m || dec.u.cols() != m) return false;
    if (dec.t.rows() != n || dec.t.cols() != n) return false;
    if (dec.s.rows() != m || dec.s.cols() != n) return false;

    auto wu = reduce_mod(dec.u, p);
    auto wa = reduce_mod(a, p);
    auto wt = reduce_mod(dec.t, p);
    auto ws = reduce_mod(dec.s, p);

    // ua = u * a, then compare ua * t with s entrywise.
    std::vector<std::uint64_t> ua(m * n, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            const std::uint64_t f = wu[i * m + k];
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                ua[i * n + j] = (ua[i * n + j] + (unsigned __int128)f * wa[k * n + j]) % p;
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (ua[i * n + k] == 0) continue;
                acc = (acc + (unsigned __int128)ua[i * n + k] * wt[k * n + j]) % p;
            }
            if (acc != ws[i * n + j]) return false;
        }
    return true;
}

}  // namespace fermat
