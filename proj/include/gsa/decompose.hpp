#pragma once

#include "gsa/matrix.hpp"
#include "gsa/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gsa {

/// Conical combination of semideterministic matrices: an ordered list of
/// (positive coefficient, basis matrix) terms over a fixed order.
class Decomposition {
public:
    struct Term {
        Rational coeff;
        RMatrix basis;

        friend bool operator==(const Term&, const Term&) = default;
    };

    explicit Decomposition(std::size_t order) : order_(order) {
        if (order == 0) throw std::invalid_argument("decomposition: order must be at least 1");
    }

    std::size_t order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    void push_term(Rational coeff, RMatrix basis) {
        if (coeff.is_zero())
            throw std::invalid_argument("decomposition: coefficient must be positive");
        if (basis.order() != order_)
            throw std::invalid_argument("decomposition: basis order mismatch");
        if (!basis.is_semideterministic())
            throw std::invalid_argument("decomposition: basis must be semideterministic");
        terms_.push_back(Term{std::move(coeff), std::move(basis)});
    }

    friend bool operator==(const Decomposition&, const Decomposition&) = default;

private:
    std::size_t order_;
    std::vector<Term> terms_;
};

/// Sum of coefficient * basis over all terms; empty list gives the zero
/// matrix.
inline RMatrix recompose(const Decomposition& d) {
    RMatrix acc(d.order());
    for (const auto& term : d.terms()) acc = add_scaled(acc, term.coeff, term.basis);
    return acc;
}

/// Merges repeated basis matrices by summing their coefficients, keeping
/// first-occurrence order.
inline Decomposition dedup(const Decomposition& d) {
    Decomposition out(d.order());
    std::vector<Rational> sums;
    std::vector<const RMatrix*> bases;
    for (const auto& term : d.terms()) {
        bool merged = false;
        for (std::size_t k = 0; k < bases.size(); ++k)
            if (*bases[k] == term.basis) {
                sums[k] += term.coeff;
                merged = true;
                break;
            }
        if (!merged) {
            sums.push_back(term.coeff);
            bases.push_back(&term.basis);
        }
    }
    for (std::size_t k = 0; k < bases.size(); ++k) out.push_term(sums[k], *bases[k]);
    return out;
}

/// Greedy peeling of a nonnegative matrix into semideterministic matrices.
/// Each round marks the leftmost minimal nonzero entry of every nonzero row,
/// subtracts (global minimal nonzero entry) times that 0/1 pattern, and
/// repeats until zero. The reduction gains at least one zero entry per round,
/// so the term count never exceeds nnz of the input.
inline Decomposition semidet_decompose(const RMatrix& a) {
    const std::size_t n = a.order();
    Decomposition result(n);
    RMatrix p = a;
    while (!p.is_zero()) {
        RMatrix pattern(n);
        std::optional<Rational> global_min;
        for (std::size_t i = 0; i < n; ++i) {
            std::optional<std::size_t> pick;
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& cell = p.at(i, j);
                if (cell.is_zero()) continue;
                if (!pick || cell < p.at(i, *pick)) pick = j;  // leftmost on ties
                if (!global_min || cell < *global_min) global_min = cell;
            }
            if (pick) pattern.at(i, *pick) = 1;
        }
        const Rational step = *global_min;
        p = [&] {
            RMatrix next = p;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (pattern.at(i, j).is_one()) next.at(i, j) -= step;
            return next;
        }();
        result.push_term(step, std::move(pattern));
    }
    return result;
}

/// Greedy peeling of a stochastic matrix; all bases come out deterministic
/// and the coefficients sum to 1.
inline Decomposition det_decompose(const RMatrix& p) {
    if (!p.is_stochastic())
        throw std::invalid_argument("decompose: input is not stochastic");
    return semidet_decompose(p);
}

namespace detail {

/// Augmenting-path matching on the support graph, rows and columns scanned
/// in index order.
class SupportMatching {
public:
    explicit SupportMatching(const RMatrix& m) : m_(m), match_col_(m.order(), npos) {}

    /// Perfect matching as row -> column, or nothing if none exists.
    std::optional<std::vector<std::size_t>> solve() {
        const std::size_t n = m_.order();
        // Seed rows with free columns first so easy instances keep their
        // natural row-by-row assignment; augmenting paths only reshuffle
        // what they must.
        std::vector<bool> row_matched(n, false);
        for (std::size_t row = 0; row < n; ++row)
            for (std::size_t col = 0; col < n; ++col)
                if (match_col_[col] == npos && !m_.at(row, col).is_zero()) {
                    match_col_[col] = row;
                    row_matched[row] = true;
                    break;
                }
        for (std::size_t row = 0; row < n; ++row) {
            if (row_matched[row]) continue;
            visited_.assign(n, false);
            if (!augment(row)) return std::nullopt;
        }
        std::vector<std::size_t> row_to_col(n);
        for (std::size_t col = 0; col < n; ++col)
            if (match_col_[col] != npos) row_to_col[match_col_[col]] = col;
        return row_to_col;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool augment(std::size_t row) {
        for (std::size_t col = 0; col < m_.order(); ++col) {
            if (visited_[col] || m_.at(row, col).is_zero()) continue;
            visited_[col] = true;
            if (match_col_[col] == npos || augment(match_col_[col])) {
                match_col_[col] = row;
                return true;
            }
        }
        return false;
    }

    const RMatrix& m_;
    std::vector<std::size_t> match_col_;
    std::vector<bool> visited_;
};

}  // namespace detail

/// Birkhoff-von Neumann peeling of a doubly stochastic matrix: repeatedly
/// subtract (minimal entry along a perfect matching of the support) times the
/// matching's permutation matrix. Coefficients sum to 1 and every basis is a
/// permutation matrix.
inline Decomposition birkhoff_decompose(const RMatrix& d) {
    if (!d.is_doubly_stochastic())
        throw std::invalid_argument("decompose: input is not doubly stochastic");
    const std::size_t n = d.order();
    Decomposition result(n);
    RMatrix p = d;
    while (!p.is_zero()) {
        const auto matching = detail::SupportMatching(p).solve();
        if (!matching)
            throw std::logic_error("decompose: support of a doubly stochastic matrix "
                                   "must carry a perfect matching");
        RMatrix pattern(n);
        std::optional<Rational> step;
        for (std::size_t i = 0; i < n; ++i) {
            pattern.at(i, (*matching)[i]) = 1;
            const Rational& cell = p.at(i, (*matching)[i]);
            if (!step || cell < *step) step = cell;
        }
        for (std::size_t i = 0; i < n; ++i) p.at(i, (*matching)[i]) -= *step;
        result.push_term(*step, std::move(pattern));
    }
    return result;
}

}  // namespace gsa
