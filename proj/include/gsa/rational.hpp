#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gsa {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact nonnegative rational scalar. Always kept in lowest terms with a
/// positive denominator; any operation that would produce a negative value
/// throws instead of silently wrapping.
class Rational {
public:
    Rational() = default;

    Rational(long long value) : value_(check_sign(BigRational(value))) {}

    Rational(const BigInt& value) : value_(check_sign(BigRational(value))) {}

    Rational(const BigInt& numerator, const BigInt& denominator) {
        if (denominator == 0)
            throw std::invalid_argument("rational: zero denominator");
        value_ = check_sign(BigRational(numerator, denominator));
    }

    /// Accepts "34", "17/4" or "0.25"; anything else (signs, whitespace,
    /// exponents) is rejected.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return denominator() == 1; }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const {
        if (is_integer()) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(BigRational(a.value_ + b.value_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(BigRational(a.value_ * b.value_));
    }
    /// Checked: throws when b > a.
    friend Rational operator-(const Rational& a, const Rational& b) {
        if (b.value_ > a.value_)
            throw std::domain_error("rational: subtraction would be negative");
        return Rational(BigRational(a.value_ - b.value_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("rational: division by zero");
        return Rational(BigRational(a.value_ / b.value_));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    explicit Rational(BigRational value) : value_(check_sign(std::move(value))) {}

    static BigRational check_sign(BigRational value) {
        if (value < 0)
            throw std::domain_error("rational: negative value");
        return value;
    }

    BigRational value_;  // canonical by construction (cpp_rational invariant)
};

inline Rational Rational::parse(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
    };
    const auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw bad();
        BigInt d{std::string(den)};
        if (d == 0) throw std::invalid_argument("rational: zero denominator");
        return Rational(BigInt{std::string(num)}, d);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) throw bad();
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt num = BigInt{std::string(whole)} * scale + BigInt{std::string(frac)};
        return Rational(num, scale);
    }
    if (!all_digits(text)) throw bad();
    return Rational(BigInt{std::string(text)});
}

}  // namespace gsa
