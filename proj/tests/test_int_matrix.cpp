#include "doctest.h"

#include "fermatlat/int_matrix.hpp"

#include "oracles.hpp"

using fermat::IntMatrix;

TEST_CASE("identity and equality") {
    IntMatrix id = IntMatrix::identity(3);
    CHECK(id.is_symmetric());
    CHECK(id(0, 0) == 1);
    CHECK(id(0, 1) == 0);
    CHECK(id == IntMatrix::identity(3));
    CHECK(id != IntMatrix(3, 3));
}

TEST_CASE("multiply matches a hand example and rejects bad shapes") {
    IntMatrix a(2, 3);
    a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = -1;
    a(1, 0) = 0; a(1, 1) = 3; a(1, 2) = 4;
    IntMatrix b(3, 2);
    b(0, 0) = 2; b(0, 1) = 0;
    b(1, 0) = 1; b(1, 1) = -1;
    b(2, 0) = 5; b(2, 1) = 1;
    IntMatrix c = fermat::multiply(a, b);
    CHECK(c(0, 0) == -1);
    CHECK(c(0, 1) == -3);
    CHECK(c(1, 0) == 23);
    CHECK(c(1, 1) == 1);
    CHECK_THROWS_AS(fermat::multiply(b, b), std::invalid_argument);
}

TEST_CASE("congruent transform") {
    IntMatrix psi(2, 2);
    psi(0, 0) = -2; psi(1, 1) = -2;

    SUBCASE("identity is a no-op") {
        CHECK(fermat::congruent_transform(IntMatrix::identity(2), psi) == psi);
    }
    SUBCASE("single row collapses to a 1x1 value") {
        IntMatrix x(1, 2);
        x(0, 0) = 1; x(0, 1) = 1;
        IntMatrix r = fermat::congruent_transform(x, psi);
        CHECK(r.rows() == 1);
        CHECK(r(0, 0) == -4);
    }
    SUBCASE("result of a symmetric form is symmetric") {
        std::mt19937_64 rng(7);
        IntMatrix x = testutil::random_matrix(rng, 3, 2, -5, 5);
        IntMatrix r = fermat::congruent_transform(x, psi);
        CHECK(r.is_symmetric());
    }
    SUBCASE("dimension mismatch is rejected") {
        CHECK_THROWS_AS(fermat::congruent_transform(IntMatrix(1, 3), psi),
                        std::invalid_argument);
    }
}

TEST_CASE("transpose, slice, vstack") {
    std::mt19937_64 rng(11);
    IntMatrix a = testutil::random_matrix(rng, 4, 3, -9, 9);
    CHECK(a.transposed().transposed() == a);
    CHECK(a.row_slice(1, 3).rows() == 2);
    CHECK(a.row_slice(1, 3)(0, 0) == a(1, 0));
    IntMatrix s = fermat::vstack(a, a.row_slice(0, 1));
    CHECK(s.rows() == 5);
    CHECK(s(4, 2) == a(0, 2));
}
