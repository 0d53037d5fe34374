#include "doctest.h"

#include "fermatlat/smith.hpp"

#include "oracles.hpp"

using fermat::IntMatrix;
using testutil::divs;

namespace {

IntMatrix diag2(int a, int b) {
    IntMatrix m(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

}  // namespace

TEST_CASE("smith decomposition on the worked examples") {
    SUBCASE("diag(2,3) -> diag(1,6)") {
        auto dec = fermat::smith_decomposition(diag2(2, 3));
        CHECK(dec.rank == 2);
        CHECK(dec.divisors == divs({{1, 1}, {6, 1}}));
        CHECK(fermat::multiply(fermat::multiply(dec.u, diag2(2, 3)), dec.t) == dec.s);
    }
    SUBCASE("zero matrix") {
        auto dec = fermat::smith_decomposition(IntMatrix(2, 2));
        CHECK(dec.rank == 0);
        CHECK(dec.divisors.empty());
        CHECK(dec.s.is_zero());
    }
    SUBCASE("[[2,4],[4,8]] -> diag(2,0)") {
        IntMatrix a(2, 2);
        a(0, 0) = 2; a(0, 1) = 4;
        a(1, 0) = 4; a(1, 1) = 8;
        auto dec = fermat::smith_decomposition(a);
        CHECK(dec.rank == 1);
        CHECK(dec.divisors == divs({{2, 1}}));
        CHECK(fermat::multiply(fermat::multiply(dec.u, a), dec.t) == dec.s);
    }
    SUBCASE("empty input is rejected") {
        CHECK_THROWS_AS(fermat::smith_decomposition(IntMatrix(0, 3)), std::invalid_argument);
    }
}

TEST_CASE("elementary divisors on the worked examples") {
    CHECK(fermat::elementary_divisors(IntMatrix::identity(4)) == divs({{1, 4}}));
    CHECK(fermat::elementary_divisors(IntMatrix(1, 1)).empty());
}

TEST_CASE("left kernel basis") {
    SUBCASE("column (1,1)^T") {
        IntMatrix a(2, 1);
        a(0, 0) = 1;
        a(1, 0) = 1;
        IntMatrix x = fermat::left_kernel_basis(a);
        REQUIRE(x.rows() == 1);
        const bool plus = x(0, 0) == 1 && x(0, 1) == -1;
        const bool minus = x(0, 0) == -1 && x(0, 1) == 1;
        CHECK((plus || minus));
    }
    SUBCASE("full rank gives the empty basis") {
        CHECK(fermat::left_kernel_basis(IntMatrix::identity(3)).rows() == 0);
    }
    SUBCASE("zero matrix gives a unimodular basis") {
        IntMatrix x = fermat::left_kernel_basis(IntMatrix(2, 2));
        REQUIRE(x.rows() == 2);
        mpz_class d = testutil::det_exact(x);
        CHECK((d == 1 || d == -1));
    }
}

TEST_CASE("unimodular sign on the worked examples") {
    CHECK(fermat::unimodular_sign(IntMatrix::identity(3)) == 1);
    IntMatrix swap01(2, 2);
    swap01(0, 1) = 1;
    swap01(1, 0) = 1;
    CHECK(fermat::unimodular_sign(swap01) == -1);
    IntMatrix d(3, 3);
    d(0, 0) = 1; d(1, 1) = 1; d(2, 2) = -1;
    CHECK(fermat::unimodular_sign(d) == -1);

    IntMatrix not_unimodular = diag2(2, 1);
    CHECK_THROWS_AS(fermat::unimodular_sign(not_unimodular), std::runtime_error);
}

TEST_CASE("unimodular sign agrees with the exact determinant up to 5x5") {
    std::mt19937_64 rng(1234);
    for (int c = 0; c < 400; ++c) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        IntMatrix u = testutil::random_unimodular(rng, dim(rng), 15);
        CHECK(fermat::unimodular_sign(u) == (testutil::det_exact(u) > 0 ? 1 : -1));
    }
}

TEST_CASE("smith property suite (random small matrices)") {
    const std::string failure = testutil::check_smith_properties(250, 42);
    INFO(failure);
    CHECK(failure.empty());
}

TEST_CASE("kernel saturation suite") {
    const std::string failure = testutil::check_kernel_saturation(43);
    INFO(failure);
    CHECK(failure.empty());
}

TEST_CASE("modular replay of a decomposition") {
    std::mt19937_64 rng(99);
    IntMatrix a = testutil::random_matrix(rng, 5, 4, -9, 9);
    auto dec = fermat::smith_decomposition(a);
    CHECK(fermat::verify_decomposition_mod(a, dec, 2147483647));
    dec.s(0, 0) += 1;
    CHECK_FALSE(fermat::verify_decomposition_mod(a, dec, 2147483647));
}
