#pragma once

#include "gsa/matrix.hpp"
#include "gsa/rational.hpp"

#include <cstdint>
#include <map>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace gsa {

/// Thrown when an enumeration grows past its safety cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One (partial) self-map of {0, ..., n-1}, the shape of a word-induced
/// transition. Composition order matches word order: `a.then(b)` applies
/// `a` first.
class TransformTable {
public:
    static constexpr std::int64_t undefined = -1;

    explicit TransformTable(std::size_t size) : images_(size, undefined) {
        if (size == 0) throw std::invalid_argument("transform: empty domain");
    }

    static TransformTable identity(std::size_t size) {
        TransformTable t(size);
        for (std::size_t i = 0; i < size; ++i) t.images_[i] = static_cast<std::int64_t>(i);
        return t;
    }

    std::size_t size() const { return images_.size(); }

    bool defined(std::size_t i) const { return images_.at(i) != undefined; }

    std::size_t target(std::size_t i) const {
        if (!defined(i)) throw std::logic_error("transform: image undefined");
        return static_cast<std::size_t>(images_[i]);
    }

    void set(std::size_t i, std::size_t j) {
        if (j >= size()) throw std::invalid_argument("transform: target out of range");
        images_.at(i) = static_cast<std::int64_t>(j);
    }
    void clear(std::size_t i) { images_.at(i) = undefined; }

    bool total() const {
        for (auto image : images_)
            if (image == undefined) return false;
        return true;
    }

    /// Apply *this first, then `next`; undefinedness propagates.
    TransformTable then(const TransformTable& next) const {
        if (size() != next.size())
            throw std::invalid_argument("transform: composition of mismatched domains");
        TransformTable result(size());
        for (std::size_t i = 0; i < size(); ++i) {
            if (!defined(i)) continue;
            const std::size_t mid = target(i);
            if (next.defined(mid)) result.set(i, next.target(mid));
        }
        return result;
    }

    const std::vector<std::int64_t>& images() const { return images_; }

    friend bool operator==(const TransformTable& a, const TransformTable& b) {
        return a.images_ == b.images_;
    }
    friend bool operator<(const TransformTable& a, const TransformTable& b) {
        return a.images_ < b.images_;
    }

private:
    std::vector<std::int64_t> images_;
};

namespace detail {

inline void check_names_distinct(const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string_view> seen;
    for (const auto& name : names)
        if (!seen.insert(name).second)
            throw std::invalid_argument(std::string(what) + ": duplicate name '" + name + "'");
}

inline std::size_t index_of(const std::vector<std::string>& names, std::string_view name,
                            const char* what) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    throw std::invalid_argument(std::string(what) + ": unknown name '" + std::string(name) + "'");
}

}  // namespace detail

/// Deterministic semiautomaton: states, input alphabet, one (partial) state
/// map per symbol.
class DeterministicSA {
public:
    DeterministicSA(std::vector<std::string> states, std::vector<std::string> alphabet,
                    std::vector<TransformTable> transitions)
        : states_(std::move(states)),
          alphabet_(std::move(alphabet)),
          transitions_(std::move(transitions)) {
        if (states_.empty()) throw std::invalid_argument("sa: empty state set");
        detail::check_names_distinct(states_, "sa states");
        detail::check_names_distinct(alphabet_, "sa alphabet");
        if (transitions_.size() != alphabet_.size())
            throw std::invalid_argument("sa: one transition table per symbol required");
        for (const auto& table : transitions_)
            if (table.size() != states_.size())
                throw std::invalid_argument("sa: transition table domain mismatch");
    }

    const std::vector<std::string>& states() const { return states_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    std::size_t state_count() const { return states_.size(); }
    std::size_t symbol_count() const { return alphabet_.size(); }

    const TransformTable& transition(std::size_t symbol) const { return transitions_.at(symbol); }

    std::size_t state_index(std::string_view name) const {
        return detail::index_of(states_, name, "sa");
    }
    std::size_t symbol_index(std::string_view name) const {
        return detail::index_of(alphabet_, name, "sa");
    }

    /// True when every symbol map is total.
    bool total() const {
        for (const auto& table : transitions_)
            if (!table.total()) return false;
        return true;
    }

    friend bool operator==(const DeterministicSA&, const DeterministicSA&) = default;

private:
    std::vector<std::string> states_;
    std::vector<std::string> alphabet_;
    std::vector<TransformTable> transitions_;
};

/// Generalized semiautomaton: one nonnegative matrix per symbol.
class GeneralizedSA {
public:
    GeneralizedSA(std::vector<std::string> states, std::vector<std::string> alphabet,
                  std::vector<RMatrix> matrices)
        : states_(std::move(states)), alphabet_(std::move(alphabet)), matrices_(std::move(matrices)) {
        if (states_.empty()) throw std::invalid_argument("gsa: empty state set");
        detail::check_names_distinct(states_, "gsa states");
        detail::check_names_distinct(alphabet_, "gsa alphabet");
        if (matrices_.size() != alphabet_.size())
            throw std::invalid_argument("gsa: one matrix per symbol required");
        for (const auto& m : matrices_)
            if (m.order() != states_.size())
                throw std::invalid_argument("gsa: matrix order mismatch");
    }

    const std::vector<std::string>& states() const { return states_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    std::size_t state_count() const { return states_.size(); }
    std::size_t symbol_count() const { return alphabet_.size(); }

    const RMatrix& matrix(std::size_t symbol) const { return matrices_.at(symbol); }

    std::size_t state_index(std::string_view name) const {
        return detail::index_of(states_, name, "gsa");
    }
    std::size_t symbol_index(std::string_view name) const {
        return detail::index_of(alphabet_, name, "gsa");
    }

    friend bool operator==(const GeneralizedSA&, const GeneralizedSA&) = default;

private:
    std::vector<std::string> states_;
    std::vector<std::string> alphabet_;
    std::vector<RMatrix> matrices_;
};

/// Word over an automaton's alphabet, as symbol indices.
using Word = std::vector<std::size_t>;

/// Word-induced map: symbols applied left to right, empty word gives the
/// identity.
inline TransformTable delta_word(const DeterministicSA& a, std::span<const std::size_t> word) {
    TransformTable result = TransformTable::identity(a.state_count());
    for (std::size_t symbol : word) {
        if (symbol >= a.symbol_count())
            throw std::invalid_argument("sa: word symbol out of range");
        result = result.then(a.transition(symbol));
    }
    return result;
}

/// Word-induced matrix: left-to-right product, empty word gives the identity.
inline RMatrix q_word(const GeneralizedSA& a, std::span<const std::size_t> word) {
    RMatrix result = RMatrix::identity(a.state_count());
    for (std::size_t symbol : word) {
        if (symbol >= a.symbol_count())
            throw std::invalid_argument("gsa: word symbol out of range");
        result = result * a.matrix(symbol);
    }
    return result;
}

/// Entry (from, to) of the word-induced matrix; the transition probability
/// for stochastic automata.
inline Rational transition_weight(const GeneralizedSA& a, std::size_t from,
                                  std::span<const std::size_t> word, std::size_t to) {
    if (from >= a.state_count() || to >= a.state_count())
        throw std::out_of_range("gsa: state index out of range");
    return q_word(a, word).at(from, to);
}

/// All word-induced maps, in breadth-first discovery order (identity first),
/// with a shortest generating word for each.
struct TransformationMonoid {
    std::vector<TransformTable> elements;
    std::vector<Word> words;  // aligned with elements

    std::size_t size() const { return elements.size(); }
};

inline TransformationMonoid transformation_monoid(const DeterministicSA& a, std::size_t cap) {
    if (cap == 0) throw std::invalid_argument("monoid: cap must be at least 1");

    TransformationMonoid monoid;
    std::map<std::vector<std::int64_t>, std::size_t> seen;

    const auto try_insert = [&](TransformTable table, Word word) {
        if (seen.count(table.images())) return false;
        if (monoid.size() + 1 > cap)
            throw CapExceeded("monoid: more than " + std::to_string(cap) + " elements");
        seen.emplace(table.images(), monoid.size());
        monoid.elements.push_back(std::move(table));
        monoid.words.push_back(std::move(word));
        return true;
    };

    try_insert(TransformTable::identity(a.state_count()), {});
    std::queue<std::size_t> frontier;
    frontier.push(0);
    while (!frontier.empty()) {
        const std::size_t current = frontier.front();
        frontier.pop();
        for (std::size_t symbol = 0; symbol < a.symbol_count(); ++symbol) {
            TransformTable next = monoid.elements[current].then(a.transition(symbol));
            Word word = monoid.words[current];
            word.push_back(symbol);
            if (try_insert(std::move(next), std::move(word))) frontier.push(monoid.size() - 1);
        }
    }
    return monoid;
}

/// 0/1 matrix per symbol: entry (i, j) is 1 exactly when the symbol maps
/// state i to state j. Rows of undefined images stay zero.
inline GeneralizedSA embed_sa(const DeterministicSA& a) {
    std::vector<RMatrix> matrices;
    matrices.reserve(a.symbol_count());
    for (std::size_t symbol = 0; symbol < a.symbol_count(); ++symbol) {
        RMatrix m(a.state_count());
        const TransformTable& table = a.transition(symbol);
        for (std::size_t i = 0; i < a.state_count(); ++i)
            if (table.defined(i)) m.at(i, table.target(i)) = 1;
        matrices.push_back(std::move(m));
    }
    return GeneralizedSA(a.states(), a.alphabet(), std::move(matrices));
}

/// Inverse of embed_sa; requires every matrix to be semideterministic.
/// Zero rows become undefined transitions.
inline DeterministicSA extract_sa(const GeneralizedSA& g) {
    std::vector<TransformTable> tables;
    tables.reserve(g.symbol_count());
    for (std::size_t symbol = 0; symbol < g.symbol_count(); ++symbol) {
        const RMatrix& m = g.matrix(symbol);
        if (!m.is_semideterministic())
            throw std::invalid_argument("extract: matrix for symbol '" +
                                        g.alphabet()[symbol] + "' is not semideterministic");
        TransformTable table(g.state_count());
        for (std::size_t i = 0; i < g.state_count(); ++i)
            for (std::size_t j = 0; j < g.state_count(); ++j)
                if (m.at(i, j).is_one()) table.set(i, j);
        tables.push_back(std::move(table));
    }
    return DeterministicSA(g.states(), g.alphabet(), std::move(tables));
}

/// Two-state stochastic automaton over the digit alphabet {0, ..., m-1};
/// the word matrices encode m-adic expansions.
inline GeneralizedSA madic(unsigned m) {
    if (m < 2) throw std::invalid_argument("madic: base must be at least 2");
    std::vector<std::string> alphabet;
    std::vector<RMatrix> matrices;
    for (unsigned x = 0; x < m; ++x) {
        alphabet.push_back(std::to_string(x));
        RMatrix p(2);
        const Rational base(static_cast<long long>(m));
        p.at(0, 0) = Rational(static_cast<long long>(m - x)) / base;
        p.at(0, 1) = Rational(static_cast<long long>(x)) / base;
        p.at(1, 0) = Rational(static_cast<long long>(m - x - 1)) / base;
        p.at(1, 1) = Rational(static_cast<long long>(x + 1)) / base;
        matrices.push_back(std::move(p));
    }
    return GeneralizedSA({"s1", "s2"}, std::move(alphabet), std::move(matrices));
}

enum class GsaClass {
    generalized,
    stochastic,
    doubly_stochastic,
    semideterministic,
    deterministic,
    permutation,
};

inline std::string to_string(GsaClass c) {
    switch (c) {
        case GsaClass::generalized: return "generalized";
        case GsaClass::stochastic: return "stochastic";
        case GsaClass::doubly_stochastic: return "doubly-stochastic";
        case GsaClass::semideterministic: return "semideterministic";
        case GsaClass::deterministic: return "deterministic";
        case GsaClass::permutation: return "permutation";
    }
    throw std::logic_error("gsa class: unreachable");
}

/// Strongest label that holds for every symbol matrix at once.
inline GsaClass classify_gsa(const GeneralizedSA& g) {
    bool permutation = true, deterministic = true, doubly = true, stochastic = true,
         semidet = true;
    for (std::size_t symbol = 0; symbol < g.symbol_count(); ++symbol) {
        const MatrixClasses c = classify(g.matrix(symbol));
        permutation &= c.permutation;
        deterministic &= c.deterministic;
        doubly &= c.doubly_stochastic;
        stochastic &= c.stochastic;
        semidet &= c.semideterministic;
    }
    if (permutation) return GsaClass::permutation;
    if (deterministic) return GsaClass::deterministic;
    if (doubly) return GsaClass::doubly_stochastic;
    if (stochastic) return GsaClass::stochastic;
    if (semidet) return GsaClass::semideterministic;
    return GsaClass::generalized;
}

}  // namespace gsa
