#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fermatlat/int_matrix.hpp"

#include "json.hpp"

namespace fermat {

/// Parameters of the Fermat hypersurface x_0^d + ... + x_{n+1}^d = 0.
struct FermatParams {
    int n = 2;  ///< even dimension
    int d = 3;  ///< degree >= 2

    /// True when d is prime, d = 4, or gcd(d, (n+1)!) = 1 -- the degree
    /// condition under which the linear Hodge lattice is the full Hodge
    /// lattice.
    bool satisfies_degree_condition() const;
};

/// One n/2-dimensional linear subspace of the Fermat hypersurface,
/// given combinatorially: a pairing of the n+2 coordinates and one
/// exponent per pair. Pair i imposes x_u = zeta_{2d}^{1+2a} x_v for
/// (u, v) = pairs[i] and a = exps[i].
struct LinearCycleSpec {
    std::vector<std::array<int, 2>> pairs;  ///< pairs[i][0] is the smallest unused index
    std::vector<int> exps;                  ///< one value in [0, d-1] per pair

    bool operator==(const LinearCycleSpec&) const = default;
};

/// N = 1*3*...*(n-1)*(n+1) * d^(n/2+1), by formula (no enumeration).
mpz_class linear_cycle_count(const FermatParams& p);

/// All N cycles in lexicographic (pairing, exponents) order. Index 0 is
/// the canonical base cycle used for primitivization. Throws
/// ResourceCapError when N exceeds max_cycles.
std::vector<LinearCycleSpec> enumerate_linear_cycles(const FermatParams& p,
                                                     std::uint64_t max_cycles);

/// Projective dimension of the intersection of two cycles, in
/// {-1, 0, ..., n/2}; -1 means empty. Decided by a weighted union-find
/// over the n+2 coordinates with exponent labels mod 2d: a merge that
/// closes a cycle with nonzero net exponent forces its whole component
/// to zero.
int intersection_dimension(const LinearCycleSpec& a, const LinearCycleSpec& b,
                           const FermatParams& p);

/// Intersection number (1 - (1-d)^(m+1)) / d of two cycles meeting in
/// projective dimension m. Always an exact integer.
mpz_class intersection_number(int m, const FermatParams& p);

/// N x N matrix of pairwise intersection numbers of the given cycles.
IntMatrix full_intersection_matrix(const FermatParams& p,
                                   const std::vector<LinearCycleSpec>& cycles,
                                   int jobs = 1);

/// (N-1) x (N-1) intersection matrix of the base-point differences
/// P_i - P_1 (i >= 2), expanded bilinearly from the full matrix.
IntMatrix primitive_intersection_matrix(const IntMatrix& full);

/// Conveniences that enumerate internally under the default cap.
IntMatrix full_intersection_matrix(const FermatParams& p);
IntMatrix primitive_intersection_matrix(const FermatParams& p);

nlohmann::json cycles_to_json(const std::vector<LinearCycleSpec>& cycles);

}  // namespace fermat
