#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fermatlat/int_matrix.hpp"
#include "fermatlat/smith.hpp"

#include "json.hpp"

namespace fermat {

/// Ascending list of positive integers; equal lists are equal multisets
/// because the divisibility chain fixes the order.
using DivisorList = std::vector<mpz_class>;

/// (value, multiplicity) pairs, ascending by value.
std::vector<std::pair<mpz_class, std::size_t>> group_divisors(const DivisorList& divisors);

/// Invariants of the nondegenerate quotient V/V^perp of a possibly
/// degenerate lattice, as read off one Gram matrix.
struct LatticeReport {
    std::string source;  ///< full-linear | primitive-linear | primitive-hodge
    int n = 0, d = 0;
    std::size_t rank = 0;
    DivisorList divisors;
    int sign = +1;
    std::map<std::uint64_t, std::size_t> mod_p_ranks;  ///< for primes dividing d
};

/// Rank, elementary divisors, and discriminant sign of V/V^perp for the
/// lattice with Gram matrix a. Throws std::invalid_argument on
/// asymmetric input.
LatticeReport nondegenerate_quotient(const IntMatrix& a, std::string source, int n, int d);

/// Same, reusing an already computed Smith decomposition of a.
LatticeReport nondegenerate_quotient(const IntMatrix& a, const SmithDecomposition& dec,
                                     std::string source, int n, int d);

/// Sign of disc(V/V^perp) from the Smith decomposition of the Gram
/// matrix: det(u) * det(t) via modular unimodular determinants.
int discriminant_sign(const IntMatrix& a, const SmithDecomposition& dec);

/// Rank of (V/pV) / (V/pV)^perp: the number of elementary divisors not
/// divisible by p. Throws std::invalid_argument when p is not prime.
std::size_t rank_mod_p(const DivisorList& divisors, std::uint64_t p);

/// Predicted elementary divisors of the primitive sublattice from those
/// of the full lattice: drop two 1s, insert d. Throws
/// std::invalid_argument if 1 has multiplicity below 2.
DivisorList table_relation(const DivisorList& full_divisors, int d);

/// "+1^26*5^10*25^1" style signed factored discriminant.
std::string format_discriminant(const LatticeReport& r);

nlohmann::json report_to_json(const LatticeReport& r);
std::string report_to_csv(const LatticeReport& r, bool header);
std::string report_to_table(const LatticeReport& r);

}  // namespace fermat
