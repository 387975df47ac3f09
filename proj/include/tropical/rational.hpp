#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "tropical/errors.hpp"

namespace tropical {

/// Exact rational number with a 64-bit numerator and denominator.
///
/// Always kept normalized: den > 0 and gcd(|num|, den) = 1. Intermediate
/// products are evaluated in 128-bit arithmetic and narrowing back to 64 bits
/// throws arithmetic_overflow instead of wrapping. Only the operations the
/// max-plus algebra needs are provided: addition, subtraction, negation and
/// exact comparison. There is no rational multiplication anywhere in the
/// library.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    /// Accepts "-10", "+3", "2.5", "-0.125" and "7/2".
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    /// "num" when integral, else "num/den".
    std::string str() const;

    Rational operator-() const { return Rational(-num_, den_, normalized_tag{}); }
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // Cross-multiplication; denominators are positive.
        auto lhs = static_cast<__int128>(a.num_) * b.den_;
        auto rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs < rhs ? std::strong_ordering::less
             : lhs > rhs ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
    }

private:
    struct normalized_tag {};
    constexpr Rational(std::int64_t n, std::int64_t d, normalized_tag) : num_(n), den_(d) {}

    static Rational reduce(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) {
        // Fast path: the bulk of the library works on integers.
        __int128 s = static_cast<__int128>(a.num_) + b.num_;
        if (s < INT64_MIN || s > INT64_MAX) throw arithmetic_overflow("rational add overflow");
        return Rational(static_cast<std::int64_t>(s), 1, Rational::normalized_tag{});
    }
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::reduce(n, d);
}

}  // namespace tropical
