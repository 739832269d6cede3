#include <gsa/decompose.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"

using namespace gsa;

namespace {
const Rational half = Rational(1) / Rational(2);
const Rational third = Rational(1) / Rational(3);

Decomposition make(std::size_t order,
                   std::initializer_list<std::pair<Rational, RMatrix>> terms) {
    Decomposition d(order);
    for (const auto& [coeff, basis] : terms) d.push_term(coeff, basis);
    return d;
}
}  // namespace

TEST_CASE("greedy peeling of the worked 3x3 matrix") {
    const RMatrix a{{2, 4, 6}, {2, 2, 8}, {3, 3, 6}};
    const Decomposition d = semidet_decompose(a);
    const Decomposition expected = make(
        3, {{Rational(2), RMatrix{{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}},
            {Rational(1), RMatrix{{0, 1, 0}, {0, 1, 0}, {1, 0, 0}}},
            {Rational(1), RMatrix{{0, 1, 0}, {0, 1, 0}, {0, 1, 0}}},
            {Rational(2), RMatrix{{0, 1, 0}, {0, 0, 1}, {0, 1, 0}}},
            {Rational(6), RMatrix{{0, 0, 1}, {0, 0, 1}, {0, 0, 1}}}});
    CHECK(d == expected);
    CHECK(recompose(d) == a);
}

TEST_CASE("greedy peeling of small two-state matrices") {
    CHECK(semidet_decompose(RMatrix{{2, 3}, {1, 0}}) ==
          make(2, {{Rational(1), RMatrix{{1, 0}, {1, 0}}},
                   {Rational(1), RMatrix{{1, 0}, {0, 0}}},
                   {Rational(3), RMatrix{{0, 1}, {0, 0}}}}));
    CHECK(semidet_decompose(RMatrix{{1, 2}, {0, 3}}) ==
          make(2, {{Rational(1), RMatrix::identity(2)},
                   {Rational(2), RMatrix{{0, 1}, {0, 1}}}}));
}

TEST_CASE("zero matrix peels to nothing") {
    CHECK(semidet_decompose(RMatrix(2)).empty());
    CHECK(semidet_decompose(RMatrix(4)).empty());
    CHECK(recompose(Decomposition(2)) == RMatrix(2));
}

TEST_CASE("stochastic peeling") {
    CHECK(det_decompose(RMatrix::identity(3)) ==
          make(3, {{Rational(1), RMatrix::identity(3)}}));
    CHECK(det_decompose(RMatrix{{half, half}, {0, 1}}) ==
          make(2, {{half, RMatrix::identity(2)}, {half, RMatrix{{0, 1}, {0, 1}}}}));
    CHECK(det_decompose(RMatrix{{half, half}, {half, half}}) ==
          make(2, {{half, RMatrix{{1, 0}, {1, 0}}}, {half, RMatrix{{0, 1}, {0, 1}}}}));
    CHECK_THROWS_AS(det_decompose(RMatrix{{2, 3}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("permutation peeling") {
    const RMatrix swap2{{0, 1}, {1, 0}};
    CHECK(birkhoff_decompose(swap2) == make(2, {{Rational(1), swap2}}));
    CHECK(birkhoff_decompose(RMatrix{{half, half}, {half, half}}) ==
          make(2, {{half, RMatrix::identity(2)}, {half, swap2}}));

    RMatrix uniform3(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) uniform3.at(i, j) = third;
    const Decomposition d = birkhoff_decompose(uniform3);
    CHECK(d.size() == 3);
    for (const auto& term : d.terms()) {
        CHECK(term.coeff == third);
        CHECK(term.basis.is_permutation());
    }
    CHECK(recompose(d) == uniform3);
    CHECK(d.size() <= 3 * 3 - 2 * 3 + 2);

    CHECK_THROWS_AS(birkhoff_decompose(RMatrix{{1, 0}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("repeated bases merge") {
    const RMatrix d1{{1, 0}, {1, 0}};
    const RMatrix d2{{0, 1}, {0, 1}};
    CHECK(dedup(make(2, {{Rational(1), d1}, {Rational(2), d1}})) ==
          make(2, {{Rational(3), d1}}));
    const Decomposition distinct = make(2, {{Rational(1), d1}, {Rational(2), d2}});
    CHECK(dedup(distinct) == distinct);
    CHECK(dedup(make(2, {{half, RMatrix::identity(2)},
                         {half * half, d1},
                         {half * half, RMatrix::identity(2)}})) ==
          make(2, {{half + half * half, RMatrix::identity(2)}, {half * half, d1}}));
}

TEST_CASE("greedy peeling never repeats a basis, so merging is a no-op on it",
          "[property]") {
    // Each row's selected column moves monotonically through its support,
    // so a pattern cannot come back.
    testgen::Rng rng(515);
    for (int i = 0; i < 40; ++i) {
        const Decomposition d =
            semidet_decompose(testgen::matrix(rng, testgen::pick(rng, 1, 5)));
        CHECK(dedup(d) == d);
    }
}

TEST_CASE("decomposition terms are validated") {
    Decomposition d(2);
    CHECK_THROWS_AS(d.push_term(Rational(0), RMatrix::identity(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(d.push_term(Rational(1), RMatrix::identity(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(d.push_term(Rational(1), RMatrix{{half, 0}, {0, 1}}),
                    std::invalid_argument);
}

TEST_CASE("peeling reassembles any nonnegative matrix exactly", "[property]") {
    testgen::Rng rng(505);
    for (int i = 0; i < 120; ++i) {
        const std::size_t n = testgen::pick(rng, 1, 6);
        const RMatrix a = i % 3 == 0 ? testgen::sparse_matrix(rng, n, 40)
                                     : testgen::matrix(rng, n);
        const Decomposition d = semidet_decompose(a);
        CHECK(recompose(d) == a);
        CHECK(d.size() <= a.nnz());
        for (const auto& term : d.terms()) {
            CHECK(term.basis.is_semideterministic());
            CHECK(term.coeff > Rational(0));
        }
        CHECK(semidet_decompose(a) == d);  // pure function, fixed tie-break
    }
}

TEST_CASE("stochastic peeling yields deterministic bases summing to one",
          "[property]") {
    testgen::Rng rng(606);
    for (int i = 0; i < 80; ++i) {
        const std::size_t n = testgen::pick(rng, 1, 6);
        const RMatrix p = testgen::stochastic_matrix(rng, n);
        const Decomposition d = det_decompose(p);
        CHECK(recompose(d) == p);
        Rational sum;
        for (const auto& term : d.terms()) {
            CHECK(term.basis.is_deterministic());
            sum += term.coeff;
        }
        CHECK(sum.is_one());
    }
}

TEST_CASE("permutation peeling on random doubly stochastic matrices",
          "[property]") {
    testgen::Rng rng(707);
    for (int i = 0; i < 80; ++i) {
        const std::size_t n = testgen::pick(rng, 1, 6);
        const RMatrix p = testgen::doubly_stochastic_matrix(rng, n, n);
        const Decomposition d = birkhoff_decompose(p);
        CHECK(recompose(d) == p);
        Rational sum;
        for (const auto& term : d.terms()) {
            CHECK(term.basis.is_permutation());
            sum += term.coeff;
        }
        CHECK(sum.is_one());
        if (p.nnz() == n * n) CHECK(d.size() <= n * n - 2 * n + 2);
    }
}
