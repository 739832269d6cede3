#include <gsa/matrix.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"

using gsa::add_scaled;
using gsa::classify;
using gsa::identity;
using gsa::Rational;
using gsa::RMatrix;

namespace {
const Rational half = Rational(1) / Rational(2);
}

TEST_CASE("identity") {
    CHECK(identity(1) == RMatrix{{1}});
    CHECK(identity(2) == RMatrix{{1, 0}, {0, 1}});
    CHECK(identity(3) == RMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(identity(0), std::invalid_argument);
}

TEST_CASE("multiplication is exact") {
    CHECK(identity(2) * identity(2) == identity(2));
    CHECK(RMatrix{{2, 3}, {1, 0}} * RMatrix{{1, 2}, {0, 3}} == RMatrix{{2, 13}, {1, 2}});

    // digit matrices of the base-2 automaton
    const RMatrix p0{{1, 0}, {half, half}};
    const RMatrix p1{{half, half}, {0, 1}};
    const Rational quarter = half * half;
    CHECK(p0 * p1 == RMatrix{{half, half}, {quarter, quarter + half}});

    CHECK_THROWS_AS(identity(2) * identity(3), std::invalid_argument);
}

TEST_CASE("add_scaled") {
    const RMatrix zero2(2);
    CHECK(add_scaled(zero2, Rational(1), identity(2)) == identity(2));
    CHECK(add_scaled(identity(2), Rational(0), RMatrix{{7, 7}, {7, 7}}) == identity(2));
    CHECK(add_scaled(zero2, Rational(3), RMatrix{{0, 1}, {0, 0}}) == RMatrix{{0, 3}, {0, 0}});
    CHECK_THROWS_AS(add_scaled(zero2, Rational(1), identity(3)), std::invalid_argument);
}

TEST_CASE("classification of the reference matrices") {
    const auto swap2 = classify(RMatrix{{0, 1}, {1, 0}});
    CHECK(swap2.permutation);
    CHECK(swap2.deterministic);
    CHECK(swap2.semideterministic);
    CHECK(swap2.stochastic);
    CHECK(swap2.doubly_stochastic);

    const auto collapse = classify(RMatrix{{1, 0}, {1, 0}});
    CHECK(collapse.stochastic);
    CHECK(collapse.deterministic);
    CHECK(collapse.semideterministic);
    CHECK_FALSE(collapse.doubly_stochastic);
    CHECK_FALSE(collapse.permutation);

    const auto partial = classify(RMatrix{{1, 0}, {0, 0}});
    CHECK(partial.semideterministic);
    CHECK_FALSE(partial.deterministic);
    CHECK_FALSE(partial.stochastic);

    const auto uniform = classify(RMatrix{{half, half}, {half, half}});
    CHECK(uniform.stochastic);
    CHECK(uniform.doubly_stochastic);
    CHECK_FALSE(uniform.semideterministic);
    CHECK_FALSE(uniform.deterministic);

    CHECK(classify(RMatrix(2)).semideterministic);  // zero matrix: all rows zero
    CHECK(uniform.labels() ==
          std::vector<std::string>{"nonnegative", "stochastic", "doubly-stochastic"});
}

TEST_CASE("classification respects the containment lattice", "[property]") {
    testgen::Rng rng(7);
    const auto check_lattice = [](const RMatrix& m) {
        const auto c = classify(m);
        CAPTURE(m.order());
        if (c.permutation) {
            CHECK(c.deterministic);
            CHECK(c.doubly_stochastic);
        }
        if (c.deterministic) CHECK(c.semideterministic);
        if (c.deterministic) CHECK(c.stochastic);
        if (c.doubly_stochastic) CHECK(c.stochastic);
    };
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = testgen::pick(rng, 1, 5);
        check_lattice(testgen::matrix(rng, n));
        check_lattice(testgen::stochastic_matrix(rng, n));
        check_lattice(testgen::permutation_matrix(rng, n));
        check_lattice(testgen::doubly_stochastic_matrix(rng, n, n));
    }
}

TEST_CASE("stochastic and doubly stochastic matrices are closed under product",
          "[property]") {
    testgen::Rng rng(11);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = testgen::pick(rng, 1, 5);
        CHECK((testgen::stochastic_matrix(rng, n) * testgen::stochastic_matrix(rng, n))
                  .is_stochastic());
        CHECK((testgen::doubly_stochastic_matrix(rng, n, n) *
               testgen::doubly_stochastic_matrix(rng, n, n))
                  .is_doubly_stochastic());
    }
}

TEST_CASE("product is associative", "[property]") {
    testgen::Rng rng(13);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = testgen::pick(rng, 1, 4);
        const RMatrix a = testgen::matrix(rng, n, 9, 5);
        const RMatrix b = testgen::matrix(rng, n, 9, 5);
        const RMatrix c = testgen::matrix(rng, n, 9, 5);
        CHECK((a * b) * c == a * (b * c));
    }
}
