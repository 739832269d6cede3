#pragma once

// Random value builders shared by the test suites. All deterministic given
// the caller's engine; kept independent of the decomposition code they help
// to check (doubly stochastic inputs are built from permutations directly).

#include <gsa/automata.hpp>
#include <gsa/matrix.hpp>
#include <gsa/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace testgen {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline gsa::Rational rational(Rng& rng, long long max_num = 20, long long max_den = 10) {
    std::uniform_int_distribution<long long> num(0, max_num);
    std::uniform_int_distribution<long long> den(1, max_den);
    return gsa::Rational(num(rng)) / gsa::Rational(den(rng));
}

inline gsa::Rational positive_rational(Rng& rng, long long max_num = 20,
                                       long long max_den = 10) {
    std::uniform_int_distribution<long long> num(1, max_num);
    std::uniform_int_distribution<long long> den(1, max_den);
    return gsa::Rational(num(rng)) / gsa::Rational(den(rng));
}

inline gsa::RMatrix matrix(Rng& rng, std::size_t n, long long max_num = 20,
                           long long max_den = 10) {
    gsa::RMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rational(rng, max_num, max_den);
    return m;
}

/// Random entries with the given chance (percent) of an exact zero.
inline gsa::RMatrix sparse_matrix(Rng& rng, std::size_t n, unsigned zero_percent,
                                  long long max_num = 6, long long max_den = 6) {
    gsa::RMatrix m(n);
    std::uniform_int_distribution<unsigned> coin(0, 99);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (coin(rng) >= zero_percent)
                m.at(i, j) = positive_rational(rng, max_num, max_den);
    return m;
}

inline gsa::RMatrix stochastic_matrix(Rng& rng, std::size_t n) {
    gsa::RMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<gsa::Rational> row(n);
        gsa::Rational sum;
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = positive_rational(rng);
            sum += row[j];
        }
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = row[j] / sum;
    }
    return m;
}

inline gsa::RMatrix permutation_matrix(Rng& rng, std::size_t n) {
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    std::shuffle(image.begin(), image.end(), rng);
    gsa::RMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, image[i]) = 1;
    return m;
}

/// Convex combination of up to `max_terms` random permutation matrices.
inline gsa::RMatrix doubly_stochastic_matrix(Rng& rng, std::size_t n,
                                             std::size_t max_terms) {
    const std::size_t terms = pick(rng, 1, max_terms);
    std::vector<gsa::Rational> weights(terms);
    gsa::Rational total;
    for (auto& w : weights) {
        w = positive_rational(rng);
        total += w;
    }
    gsa::RMatrix m(n);
    for (std::size_t t = 0; t < terms; ++t)
        m = gsa::add_scaled(m, weights[t] / total, permutation_matrix(rng, n));
    return m;
}

inline std::vector<std::string> names(const char* prefix, std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i + 1));
    return out;
}

/// Partial maps allowed: roughly one image in eight is left undefined.
inline gsa::DeterministicSA sa(Rng& rng, std::size_t n, std::size_t symbols) {
    std::vector<gsa::TransformTable> tables;
    for (std::size_t x = 0; x < symbols; ++x) {
        gsa::TransformTable t(n);
        for (std::size_t i = 0; i < n; ++i)
            if (pick(rng, 0, 7) != 0) t.set(i, pick(rng, 0, n - 1));
        tables.push_back(std::move(t));
    }
    return gsa::DeterministicSA(names("s", n), names("a", symbols), std::move(tables));
}

inline gsa::GeneralizedSA gsa_automaton(Rng& rng, std::size_t n, std::size_t symbols,
                                        long long max_num = 20, long long max_den = 10) {
    std::vector<gsa::RMatrix> matrices;
    for (std::size_t x = 0; x < symbols; ++x) matrices.push_back(matrix(rng, n, max_num, max_den));
    return gsa::GeneralizedSA(names("s", n), names("a", symbols), std::move(matrices));
}

inline gsa::GeneralizedSA sparse_gsa(Rng& rng, std::size_t n, std::size_t symbols,
                                     unsigned zero_percent) {
    std::vector<gsa::RMatrix> matrices;
    for (std::size_t x = 0; x < symbols; ++x)
        matrices.push_back(sparse_matrix(rng, n, zero_percent));
    return gsa::GeneralizedSA(names("s", n), names("a", symbols), std::move(matrices));
}

inline gsa::GeneralizedSA stochastic_gsa(Rng& rng, std::size_t n, std::size_t symbols) {
    std::vector<gsa::RMatrix> matrices;
    for (std::size_t x = 0; x < symbols; ++x) matrices.push_back(stochastic_matrix(rng, n));
    return gsa::GeneralizedSA(names("s", n), names("a", symbols), std::move(matrices));
}

inline gsa::GeneralizedSA doubly_stochastic_gsa(Rng& rng, std::size_t n,
                                                std::size_t symbols) {
    std::vector<gsa::RMatrix> matrices;
    for (std::size_t x = 0; x < symbols; ++x)
        matrices.push_back(doubly_stochastic_matrix(rng, n, n));
    return gsa::GeneralizedSA(names("s", n), names("a", symbols), std::move(matrices));
}

inline gsa::Word word(Rng& rng, std::size_t symbols, std::size_t length) {
    gsa::Word w(length);
    for (auto& symbol : w) symbol = pick(rng, 0, symbols - 1);
    return w;
}

}  // namespace testgen
