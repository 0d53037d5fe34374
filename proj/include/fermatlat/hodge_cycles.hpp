#pragma once

#include <cstddef>
#include <vector>

#include "fermatlat/cyclotomic.hpp"
#include "fermatlat/int_matrix.hpp"
#include "fermatlat/linear_cycles.hpp"
#include "fermatlat/smith.hpp"

#include "json.hpp"

namespace fermat {

/// Multi-index beta = (beta_1, ..., beta_{n+1}), entries in [0, d-2],
/// labelling the spherical basis cycles of the affine middle homology.
/// Ordering is lexicographic everywhere.
using BetaIndex = std::vector<int>;

/// The index sets cut out of I = {0..d-2}^{n+1}:
///   i1 -- indices of the holomorphic-side forms (period conditions for
///         every Hodge cycle),
///   i2 -- the extra indices defining linear Hodge cycles for composite
///         degrees (empty when d is prime, d = 4, or gcd(d,(n+1)!) = 1).
struct HodgeIndexSets {
    std::vector<BetaIndex> all;      ///< I, size mu = (d-1)^(n+1)
    std::vector<BetaIndex> i1;
    std::vector<BetaIndex> i2;
    std::vector<BetaIndex> columns;  ///< I1 union I2, lex sorted, deduplicated

    std::size_t mu() const { return all.size(); }
    std::size_t mu_check() const { return columns.size(); }
};

/// Dense matrix over Z[zeta_d], row-major.
struct CyclotomicMatrix {
    unsigned long d = 1;
    std::size_t rows = 0, cols = 0;
    std::vector<CyclotomicInt> entries;

    const CyclotomicInt& operator()(std::size_t i, std::size_t j) const {
        return entries[i * cols + j];
    }
    CyclotomicInt& operator()(std::size_t i, std::size_t j) {
        return entries[i * cols + j];
    }
};

HodgeIndexSets build_index_sets(const FermatParams& p);

/// Membership test used by i2: an extra exponent beta_0 in [0, d-2]
/// completing the degree sum to d(n/2+1), and no fixed-point-free
/// involution of the extended tuple pairing entries to sum d-2.
bool in_second_index_set(const BetaIndex& beta, const FermatParams& p);

/// The mu x mu_check period-condition matrix: entry (beta, beta') is
/// prod_i (zeta^{(beta_i+1)(beta'_i+1)} - zeta^{beta_i (beta'_i+1)}).
CyclotomicMatrix q_matrix(const FermatParams& p, const HodgeIndexSets& s);

/// Splits q = sum_i Q_i zeta^i into its integer coefficient blocks and
/// concatenates them: a mu x (mu_check * phi(d)) integer matrix with the
/// same left kernel as q.
IntMatrix coefficient_concatenation(const CyclotomicMatrix& q);

/// The mu x mu intersection matrix of the spherical basis cycles
/// (Pham's rules): diagonal (-1)^{n(n-1)/2} * 2 for even n, entries
/// +-1 where the indices are componentwise adjacent, 0 elsewhere.
IntMatrix pham_intersection_matrix(const FermatParams& p);

/// Everything the vanishing-cycle branch produces, kept separately so
/// the pipeline can cache the intermediate stages.
struct HodgeBranch {
    HodgeIndexSets sets;
    IntMatrix a2;              ///< coefficient concatenation of q
    SmithDecomposition a2_snf;
    IntMatrix kernel;          ///< X: saturated basis of {c : c*a2 = 0}
    IntMatrix a3;              ///< X * Psi * X^T
    bool degenerate = false;   ///< mu_check = 0: every primitive class qualifies
};

HodgeBranch build_hodge_branch(const FermatParams& p);

/// Just the intersection matrix of primitive linear Hodge cycles.
IntMatrix primitive_hodge_matrix(const FermatParams& p);

nlohmann::json index_sets_to_json(const HodgeIndexSets& s);

}  // namespace fermat
