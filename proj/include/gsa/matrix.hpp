#pragma once

#include "gsa/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsa {

/// Dense square matrix of nonnegative rationals.
class RMatrix {
public:
    /// Zero matrix of the given order (order 0 is rejected).
    explicit RMatrix(std::size_t order) : order_(order), cells_(order * order) {
        if (order == 0) throw std::invalid_argument("matrix: order must be at least 1");
    }

    /// Row-major literal, e.g. RMatrix({{2, 3}, {1, 0}}).
    RMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
        : RMatrix(rows.size()) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != order_)
                throw std::invalid_argument("matrix: literal is not square");
            std::size_t j = 0;
            for (const auto& cell : row) at(i, j++) = cell;
            ++i;
        }
    }

    static RMatrix identity(std::size_t order) {
        RMatrix m(order);
        for (std::size_t i = 0; i < order; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t order() const { return order_; }

    Rational& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return cells_[i * order_ + j];
    }
    const Rational& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return cells_[i * order_ + j];
    }

    Rational row_sum(std::size_t i) const {
        Rational sum;
        for (std::size_t j = 0; j < order_; ++j) sum += at(i, j);
        return sum;
    }
    Rational col_sum(std::size_t j) const {
        Rational sum;
        for (std::size_t i = 0; i < order_; ++i) sum += at(i, j);
        return sum;
    }

    std::size_t nnz() const {
        std::size_t count = 0;
        for (const auto& cell : cells_)
            if (!cell.is_zero()) ++count;
        return count;
    }
    bool is_zero() const { return nnz() == 0; }

    bool is_stochastic() const {
        for (std::size_t i = 0; i < order_; ++i)
            if (!row_sum(i).is_one()) return false;
        return true;
    }
    bool is_doubly_stochastic() const {
        if (!is_stochastic()) return false;
        for (std::size_t j = 0; j < order_; ++j)
            if (!col_sum(j).is_one()) return false;
        return true;
    }
    /// Exactly one entry of 1 in each row, 0 elsewhere.
    bool is_deterministic() const {
        for (std::size_t i = 0; i < order_; ++i)
            if (row_kind(i) != RowKind::unit) return false;
        return true;
    }
    /// Each nonzero row has exactly one entry of 1, 0 elsewhere.
    bool is_semideterministic() const {
        for (std::size_t i = 0; i < order_; ++i)
            if (row_kind(i) == RowKind::other) return false;
        return true;
    }
    bool is_permutation() const {
        if (!is_deterministic()) return false;
        for (std::size_t j = 0; j < order_; ++j)
            if (!col_sum(j).is_one()) return false;
        return true;
    }

    friend bool operator==(const RMatrix& a, const RMatrix& b) {
        return a.order_ == b.order_ && a.cells_ == b.cells_;
    }

private:
    enum class RowKind { zero, unit, other };

    RowKind row_kind(std::size_t i) const {
        std::size_t ones = 0;
        for (std::size_t j = 0; j < order_; ++j) {
            const Rational& cell = at(i, j);
            if (cell.is_zero()) continue;
            if (!cell.is_one()) return RowKind::other;
            ++ones;
        }
        if (ones == 0) return RowKind::zero;
        return ones == 1 ? RowKind::unit : RowKind::other;
    }

    void check_index(std::size_t i, std::size_t j) const {
        if (i >= order_ || j >= order_)
            throw std::out_of_range("matrix: index out of range");
    }

    std::size_t order_;
    std::vector<Rational> cells_;
};

inline RMatrix identity(std::size_t order) { return RMatrix::identity(order); }

inline RMatrix multiply(const RMatrix& a, const RMatrix& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("matrix: product of mismatched orders");
    const std::size_t n = a.order();
    RMatrix result(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                result.at(i, j) += aik * b.at(k, j);
        }
    return result;
}

inline RMatrix operator*(const RMatrix& a, const RMatrix& b) { return multiply(a, b); }

/// acc + c*m, exact.
inline RMatrix add_scaled(const RMatrix& acc, const Rational& c, const RMatrix& m) {
    if (acc.order() != m.order())
        throw std::invalid_argument("matrix: sum of mismatched orders");
    RMatrix result = acc;
    if (c.is_zero()) return result;
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j)
            if (!m.at(i, j).is_zero()) result.at(i, j) += c * m.at(i, j);
    return result;
}

/// All class labels that hold for a matrix. `nonnegative` is true by
/// construction; the remaining flags follow the usual containments
/// (permutation implies deterministic and doubly-stochastic, and so on).
struct MatrixClasses {
    bool stochastic = false;
    bool doubly_stochastic = false;
    bool deterministic = false;
    bool semideterministic = false;
    bool permutation = false;

    std::vector<std::string> labels() const {
        std::vector<std::string> out{"nonnegative"};
        if (stochastic) out.push_back("stochastic");
        if (doubly_stochastic) out.push_back("doubly-stochastic");
        if (deterministic) out.push_back("deterministic");
        if (semideterministic) out.push_back("semideterministic");
        if (permutation) out.push_back("permutation");
        return out;
    }
};

inline MatrixClasses classify(const RMatrix& m) {
    MatrixClasses c;
    c.stochastic = m.is_stochastic();
    c.doubly_stochastic = m.is_doubly_stochastic();
    c.deterministic = m.is_deterministic();
    c.semideterministic = m.is_semideterministic();
    c.permutation = m.is_permutation();
    return c;
}

}  // namespace gsa
