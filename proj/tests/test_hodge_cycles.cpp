#include "doctest.h"

#include "fermatlat/hodge_cycles.hpp"

#include <algorithm>
#include <random>

#include "fermatlat/lattice.hpp"
#include "oracles.hpp"

using fermat::BetaIndex;
using fermat::CyclotomicInt;
using fermat::FermatParams;
using fermat::IntMatrix;
using testutil::divs;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("index sets on the worked examples") {
    SUBCASE("(2,3): no period conditions") {
        const auto s = fermat::build_index_sets({2, 3});
        CHECK(s.mu() == 8);
        CHECK(s.i1.empty());
        CHECK(s.i2.empty());
        CHECK(s.mu_check() == 0);
    }
    SUBCASE("(2,4): exactly the zero index") {
        const auto s = fermat::build_index_sets({2, 4});
        CHECK(s.mu() == 27);
        REQUIRE(s.i1.size() == 1);
        CHECK(s.i1[0] == BetaIndex{0, 0, 0});
        CHECK(s.i2.empty());
    }
    SUBCASE("holomorphic count is binomial for surfaces") {
        for (int d : {4, 5, 6})
            CHECK(fermat::build_index_sets({2, d}).i1.size() ==
                  binom(static_cast<std::size_t>(d - 1), 3));
    }
    SUBCASE("(2,6): (1,1,4) is an exceptional index") {
        CHECK(fermat::in_second_index_set({1, 1, 4}, {2, 6}));
        const auto s = fermat::build_index_sets({2, 6});
        CHECK(std::find(s.i2.begin(), s.i2.end(), BetaIndex{1, 1, 4}) != s.i2.end());
        CHECK_FALSE(s.i2.empty());
    }
    SUBCASE("prime degree or d=4 gives empty exceptional set") {
        for (const auto& [n, d] :
             std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {2, 7}, {4, 3}, {2, 4}, {4, 4}})
            CHECK(fermat::build_index_sets({n, d}).i2.empty());
    }
    SUBCASE("exceptional membership is permutation invariant") {
        const FermatParams p{2, 6};
        const auto s = fermat::build_index_sets(p);
        std::mt19937_64 rng(5);
        for (const auto& beta : s.all) {
            BetaIndex perm = beta;
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(fermat::in_second_index_set(beta, p) ==
                  fermat::in_second_index_set(perm, p));
        }
    }
}

TEST_CASE("period matrix entries") {
    const FermatParams p{2, 4};
    const auto s = fermat::build_index_sets(p);
    const auto q = fermat::q_matrix(p, s);
    REQUIRE(q.rows == 27);
    REQUIRE(q.cols == 1);

    // Row of beta = (0,0,0): the entry is (zeta - 1)^3.
    const auto z = fermat::zeta_power(1, 4);
    const auto one = CyclotomicInt::from_integer(4, 1);
    const auto expected = (z - one) * (z - one) * (z - one);
    CHECK(q(0, 0) == expected);

    // No factor can vanish: beta'_i + 1 is never divisible by d.
    for (std::size_t r = 0; r < q.rows; ++r) CHECK_FALSE(q(r, 0).is_zero());
}

TEST_CASE("coefficient concatenation") {
    SUBCASE("constant entry") {
        fermat::CyclotomicMatrix q{4, 1, 1, {CyclotomicInt::from_integer(4, 1)}};
        const IntMatrix a2 = fermat::coefficient_concatenation(q);
        REQUIRE(a2.rows() == 1);
        REQUIRE(a2.cols() == 2);
        CHECK(a2(0, 0) == 1);
        CHECK(a2(0, 1) == 0);
    }
    SUBCASE("pure zeta entry") {
        fermat::CyclotomicMatrix q{4, 1, 1, {fermat::zeta_power(1, 4)}};
        const IntMatrix a2 = fermat::coefficient_concatenation(q);
        CHECK(a2(0, 0) == 0);
        CHECK(a2(0, 1) == 1);
    }
    SUBCASE("reduced power") {
        fermat::CyclotomicMatrix q{3, 1, 1, {fermat::zeta_power(2, 3)}};
        const IntMatrix a2 = fermat::coefficient_concatenation(q);
        CHECK(a2(0, 0) == -1);
        CHECK(a2(0, 1) == -1);
    }
}

TEST_CASE("spherical-cycle intersection matrix") {
    SUBCASE("n=2 diagonal is -2, n=4 diagonal is +2") {
        const IntMatrix psi2 = fermat::pham_intersection_matrix({2, 3});
        for (std::size_t i = 0; i < psi2.rows(); ++i) CHECK(psi2(i, i) == -2);
        const IntMatrix psi4 = fermat::pham_intersection_matrix({4, 3});
        for (std::size_t i = 0; i < psi4.rows(); ++i) CHECK(psi4(i, i) == 2);
    }
    SUBCASE("adjacent and non-adjacent entries for (2,4)") {
        const FermatParams p{2, 4};
        const auto sets = fermat::build_index_sets(p);
        const IntMatrix psi = fermat::pham_intersection_matrix(p);
        auto row_of = [&](const BetaIndex& b) {
            return static_cast<std::size_t>(
                std::find(sets.all.begin(), sets.all.end(), b) - sets.all.begin());
        };
        // (0,0,0) vs (0,0,1): one step up, sign (-1)^3 * (-1)^1 = +1.
        CHECK(psi(row_of({0, 0, 0}), row_of({0, 0, 1})) == 1);
        // (0,0,0) vs (0,0,2): gap of two, no intersection.
        CHECK(psi(row_of({0, 0, 0}), row_of({0, 0, 2})) == 0);
        // (0,0,0) vs (0,1,1): two steps up, sign (-1)^3 * (-1)^2 = -1.
        CHECK(psi(row_of({0, 0, 0}), row_of({0, 1, 1})) == -1);
    }
    SUBCASE("shape suite") {
        const std::string failure = testutil::check_pham_shape();
        INFO(failure);
        CHECK(failure.empty());
    }
}

TEST_CASE("hodge branch for (2,3): degenerate kernel") {
    const auto br = fermat::build_hodge_branch({2, 3});
    CHECK(br.degenerate);
    CHECK(br.kernel == IntMatrix::identity(8));
    CHECK(br.a3 == fermat::pham_intersection_matrix({2, 3}));
    CHECK(fermat::elementary_divisors(br.a3) == divs({{1, 5}, {3, 1}}));
}

TEST_CASE("hodge branch for (2,4) and (2,6): kernel annihilates the period matrix") {
    for (int d : {4, 6}) {
        const FermatParams p{2, d};
        const auto br = fermat::build_hodge_branch(p);
        CHECK_FALSE(br.degenerate);
        CHECK(br.kernel.rows() == br.a2.rows() - br.a2_snf.rank);
        CHECK(fermat::multiply(br.kernel, br.a2).is_zero());
        CHECK(br.a3.is_symmetric());

        // Independent check in cyclotomic arithmetic: each kernel row,
        // contracted against the period matrix over Z[zeta_d], vanishes.
        const auto q = fermat::q_matrix(p, br.sets);
        for (std::size_t r = 0; r < br.kernel.rows(); ++r) {
            for (std::size_t c = 0; c < q.cols; ++c) {
                CyclotomicInt acc(q.d);
                for (std::size_t k = 0; k < q.rows; ++k) {
                    if (br.kernel(r, k) == 0) continue;
                    CyclotomicInt term = q(k, c);
                    std::vector<mpz_class> scaled;
                    for (const auto& coeff : term.coeffs())
                        scaled.push_back(coeff * br.kernel(r, k));
                    acc = acc + CyclotomicInt(q.d, std::move(scaled));
                }
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("index set JSON shape") {
    const auto j = fermat::index_sets_to_json(fermat::build_index_sets({2, 4}));
    CHECK(j["mu"] == 27);
    CHECK(j["mu_check"] == 1);
    CHECK(j["I1"] == nlohmann::json::parse("[[0,0,0]]"));
    CHECK(j["I2"] == nlohmann::json::parse("[]"));
}
