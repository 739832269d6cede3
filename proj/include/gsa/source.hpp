#pragma once

#include "gsa/automata.hpp"
#include "gsa/decompose.hpp"
#include "gsa/matrix.hpp"
#include "gsa/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gsa {

/// Weight table gamma(z|x) from input symbols x to output symbols z. When
/// every row is a probability distribution this is a dependent source proper.
class DependentSource {
public:
    DependentSource(std::vector<std::string> input_alphabet,
                    std::vector<std::string> output_alphabet,
                    std::vector<std::vector<Rational>> weights)
        : input_alphabet_(std::move(input_alphabet)),
          output_alphabet_(std::move(output_alphabet)),
          weights_(std::move(weights)) {
        detail::check_names_distinct(input_alphabet_, "source input alphabet");
        detail::check_names_distinct(output_alphabet_, "source output alphabet");
        if (weights_.size() != input_alphabet_.size())
            throw std::invalid_argument("source: one weight row per input symbol required");
        for (const auto& row : weights_)
            if (row.size() != output_alphabet_.size())
                throw std::invalid_argument("source: weight row length mismatch");
    }

    const std::vector<std::string>& input_alphabet() const { return input_alphabet_; }
    const std::vector<std::string>& output_alphabet() const { return output_alphabet_; }

    /// gamma(z|x).
    const Rational& weight(std::size_t x, std::size_t z) const {
        return weights_.at(x).at(z);
    }

    std::size_t input_index(std::string_view name) const {
        return detail::index_of(input_alphabet_, name, "source input");
    }
    std::size_t output_index(std::string_view name) const {
        return detail::index_of(output_alphabet_, name, "source output");
    }

    /// True when every gamma(.|x) sums to 1.
    bool is_probabilistic() const {
        for (const auto& row : weights_) {
            Rational sum;
            for (const auto& w : row) sum += w;
            if (!sum.is_one()) return false;
        }
        return true;
    }

    friend bool operator==(const DependentSource&, const DependentSource&) = default;

private:
    std::vector<std::string> input_alphabet_;
    std::vector<std::string> output_alphabet_;
    std::vector<std::vector<Rational>> weights_;  // [input][output]
};

/// gamma(v|u) on words: 0 when lengths differ, otherwise the product of the
/// per-position weights (empty words give 1).
inline Rational gamma_word(const DependentSource& s, std::span<const std::size_t> output_word,
                           std::span<const std::size_t> input_word) {
    if (input_word.size() != output_word.size()) return Rational(0);
    Rational product(1);
    for (std::size_t t = 0; t < input_word.size(); ++t) {
        if (input_word[t] >= s.input_alphabet().size() ||
            output_word[t] >= s.output_alphabet().size())
            throw std::invalid_argument("source: word symbol out of range");
        product *= s.weight(input_word[t], output_word[t]);
        if (product.is_zero()) return product;
    }
    return product;
}

/// Automaton whose symbol matrices are the conical combinations
/// sum_z gamma(z|x) * Q_z of the machine's matrices.
inline GeneralizedSA sequential_product(const DependentSource& s, const GeneralizedSA& machine) {
    if (s.output_alphabet() != machine.alphabet())
        throw std::invalid_argument("sequential product: source output alphabet must match "
                                    "machine alphabet");
    const std::size_t n = machine.state_count();
    std::vector<RMatrix> matrices;
    matrices.reserve(s.input_alphabet().size());
    for (std::size_t x = 0; x < s.input_alphabet().size(); ++x) {
        RMatrix acc(n);
        for (std::size_t z = 0; z < s.output_alphabet().size(); ++z)
            acc = add_scaled(acc, s.weight(x, z), machine.matrix(z));
        matrices.push_back(std::move(acc));
    }
    return GeneralizedSA(machine.states(), s.input_alphabet(), std::move(matrices));
}

/// Result of factoring an automaton: a source feeding a semideterministic
/// machine, plus the basis matrix for each output symbol.
class Factorization {
public:
    Factorization(DependentSource source, DeterministicSA machine, std::vector<RMatrix> basis)
        : source_(std::move(source)), machine_(std::move(machine)), basis_(std::move(basis)) {
        if (source_.output_alphabet() != machine_.alphabet())
            throw std::invalid_argument("factorization: machine alphabet mismatch");
        if (basis_.size() != machine_.symbol_count())
            throw std::invalid_argument("factorization: one basis matrix per output symbol");
        const GeneralizedSA embedded = embed_sa(machine_);
        for (std::size_t z = 0; z < basis_.size(); ++z)
            if (!(basis_[z] == embedded.matrix(z)))
                throw std::invalid_argument("factorization: basis does not match machine");
    }

    const DependentSource& source() const { return source_; }
    const DeterministicSA& machine() const { return machine_; }
    const std::vector<RMatrix>& basis() const { return basis_; }

    /// The machine's matrices as an automaton over the output alphabet.
    GeneralizedSA basis_gsa() const {
        return GeneralizedSA(machine_.states(), machine_.alphabet(), basis_);
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    DependentSource source_;
    DeterministicSA machine_;
    std::vector<RMatrix> basis_;
};

/// Factor an automaton into source and semideterministic machine: decompose
/// each symbol matrix, merge repeated bases, and take the output alphabet
/// z1, z2, ... as the distinct bases in order of first appearance. Doubly
/// stochastic automata go through the Birkhoff route (permutation machine)
/// unless force_greedy is set; stochastic ones come out with a probabilistic
/// source and a total deterministic machine.
inline Factorization factorize(const GeneralizedSA& a, bool force_greedy = false) {
    bool doubly = true;
    for (std::size_t x = 0; x < a.symbol_count(); ++x)
        doubly &= a.matrix(x).is_doubly_stochastic();
    const bool use_birkhoff = doubly && !force_greedy;

    std::vector<Decomposition> per_symbol;
    per_symbol.reserve(a.symbol_count());
    for (std::size_t x = 0; x < a.symbol_count(); ++x)
        per_symbol.push_back(dedup(use_birkhoff ? birkhoff_decompose(a.matrix(x))
                                                : semidet_decompose(a.matrix(x))));

    // Output alphabet: distinct bases by first appearance.
    std::vector<RMatrix> bases;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> coeffs(a.symbol_count());
    for (std::size_t x = 0; x < a.symbol_count(); ++x)
        for (const auto& term : per_symbol[x].terms()) {
            std::size_t z = bases.size();
            for (std::size_t k = 0; k < bases.size(); ++k)
                if (bases[k] == term.basis) {
                    z = k;
                    break;
                }
            if (z == bases.size()) bases.push_back(term.basis);
            coeffs[x].emplace_back(z, term.coeff);
        }

    std::vector<std::string> output_alphabet;
    output_alphabet.reserve(bases.size());
    for (std::size_t z = 0; z < bases.size(); ++z)
        output_alphabet.push_back("z" + std::to_string(z + 1));

    std::vector<std::vector<Rational>> weights(a.symbol_count(),
                                               std::vector<Rational>(bases.size()));
    for (std::size_t x = 0; x < a.symbol_count(); ++x)
        for (const auto& [z, coeff] : coeffs[x]) weights[x][z] = coeff;

    DependentSource source(a.alphabet(), output_alphabet, std::move(weights));
    DeterministicSA machine =
        extract_sa(GeneralizedSA(a.states(), output_alphabet, bases));
    return Factorization(std::move(source), std::move(machine), std::move(bases));
}

/// Outcome of checking a factorization against an automaton. A failure
/// carries the first counterexample: the input word, the automaton's matrix
/// for it, and what the factorization reconstructs instead.
struct VerifyReport {
    struct Counterexample {
        std::vector<std::string> word;  // over the automaton's input alphabet
        RMatrix expected;               // from the automaton
        RMatrix reconstructed;          // from the factorization
    };

    std::optional<Counterexample> failure;

    bool ok() const { return !failure.has_value(); }
};

namespace detail {

/// sum over v of gamma(v|u) * Q_v, expanding output words position by
/// position and pruning zero-weight prefixes.
inline void weighted_output_sum(const DependentSource& s, const GeneralizedSA& basis,
                                std::span<const std::size_t> input_word, std::size_t position,
                                const Rational& coeff, const RMatrix& prefix, RMatrix& acc) {
    if (position == input_word.size()) {
        acc = add_scaled(acc, coeff, prefix);
        return;
    }
    for (std::size_t z = 0; z < s.output_alphabet().size(); ++z) {
        const Rational next = coeff * s.weight(input_word[position], z);
        if (next.is_zero()) continue;
        weighted_output_sum(s, basis, input_word, position + 1, next,
                            prefix * basis.matrix(z), acc);
    }
}

}  // namespace detail

/// Check the per-symbol identity exactly, then the word-level identity for
/// every input word up to max_word_len by brute-force summation over output
/// words. A failed check is reported, not thrown.
inline VerifyReport verify_factorization(const GeneralizedSA& a, const Factorization& f,
                                         std::size_t max_word_len) {
    if (a.alphabet() != f.source().input_alphabet())
        throw std::invalid_argument("verify: automaton alphabet does not match source input "
                                    "alphabet");
    if (a.states() != f.machine().states())
        throw std::invalid_argument("verify: automaton states do not match machine states");

    const GeneralizedSA basis = f.basis_gsa();
    const auto word_names = [&](std::span<const std::size_t> word) {
        std::vector<std::string> names;
        for (std::size_t symbol : word) names.push_back(a.alphabet()[symbol]);
        return names;
    };

    // Defining per-symbol identity.
    for (std::size_t x = 0; x < a.symbol_count(); ++x) {
        RMatrix combined(a.state_count());
        for (std::size_t z = 0; z < f.source().output_alphabet().size(); ++z)
            combined = add_scaled(combined, f.source().weight(x, z), basis.matrix(z));
        if (!(combined == a.matrix(x)))
            return VerifyReport{VerifyReport::Counterexample{
                {a.alphabet()[x]}, a.matrix(x), std::move(combined)}};
    }

    // Word-level identity, all input words up to the requested length.
    std::vector<Word> level{Word{}};
    for (std::size_t len = 0; len <= max_word_len; ++len) {
        for (const Word& u : level) {
            RMatrix sum(a.state_count());
            detail::weighted_output_sum(f.source(), basis, u, 0, Rational(1),
                                        RMatrix::identity(a.state_count()), sum);
            const RMatrix direct = q_word(a, u);
            if (!(sum == direct))
                return VerifyReport{
                    VerifyReport::Counterexample{word_names(u), direct, std::move(sum)}};
        }
        if (len == max_word_len) break;
        std::vector<Word> next;
        next.reserve(level.size() * a.symbol_count());
        for (const Word& u : level)
            for (std::size_t x = 0; x < a.symbol_count(); ++x) {
                Word extended = u;
                extended.push_back(x);
                next.push_back(std::move(extended));
            }
        level = std::move(next);
    }
    return VerifyReport{};
}

}  // namespace gsa
