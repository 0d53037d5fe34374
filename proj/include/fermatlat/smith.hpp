#pragma once

#include <cstdint>
#include <vector>

#include "fermatlat/int_matrix.hpp"

namespace fermat {

/// Smith decomposition u * a * t = s of an integer matrix.
///
/// u and t are unimodular (det = +-1), s is diagonal with nonnegative
/// entries a_1, ..., a_m, 0, ..., 0 where a_i | a_{i+1} and m = rank(a).
struct SmithDecomposition {
    IntMatrix u;  ///< rows(a) x rows(a), unimodular
    IntMatrix s;  ///< rows(a) x cols(a), diag(a_1..a_m, 0..)
    IntMatrix t;  ///< cols(a) x cols(a), unimodular
    std::size_t rank = 0;
    std::vector<mpz_class> divisors;  ///< a_1..a_m, ascending divisibility chain
};

/// Diagonalize by unimodular row/column operations, tracking the
/// transforms. Pivots are chosen as the nonzero entry of smallest
/// absolute value in the remaining submatrix, which keeps intermediate
/// entries small on the intersection matrices this toolkit produces.
SmithDecomposition smith_decomposition(const IntMatrix& a);

/// The multiset {a_1, ..., a_m}, returned as an ascending list.
std::vector<mpz_class> elementary_divisors(const IntMatrix& a);

/// A basis of the integer row vectors c with c * a = 0, as the rows of
/// the returned (rows(a) - rank(a)) x rows(a) matrix. The basis is
/// saturated: every integer solution is an integer combination of it.
IntMatrix left_kernel_basis(const IntMatrix& a);

/// det(u) for a matrix known to be unimodular, computed modulo an odd
/// prime. Throws std::runtime_error if the modular determinant is not
/// congruent to +-1 (i.e. the precondition fails).
int unimodular_sign(const IntMatrix& u);

/// Spot-check u * a * t == s modulo a word-sized prime p. Cheap enough
/// to run after every large reduction.
bool verify_decomposition_mod(const IntMatrix& a, const SmithDecomposition& dec,
                              std::uint64_t p);

}  // namespace fermat
