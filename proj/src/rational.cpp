#include "tropical/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace tropical {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(__int128 v, const char* what) {
    if (v < INT64_MIN || v > INT64_MAX) throw arithmetic_overflow(what);
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational Rational::reduce(__int128 n, __int128 d) {
    if (d == 0) throw precondition_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n, "rational numerator overflow"),
                    narrow(d, "rational denominator overflow"), normalized_tag{});
}

Rational::Rational(std::int64_t n, std::int64_t d) { *this = reduce(n, d); }

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&]() -> Rational { throw precondition_error("bad rational literal: '" + std::string(text) + "'"); };

    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) return fail();

    __int128 intpart = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        intpart = intpart * 10 + (text[pos] - '0');
        if (intpart > INT64_MAX) throw arithmetic_overflow("rational literal too large");
        ++pos;
    }

    __int128 num = intpart;
    __int128 den = 1;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) return fail();
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            num = num * 10 + (text[pos] - '0');
            den *= 10;
            if (num > INT64_MAX || den > INT64_MAX) throw arithmetic_overflow("rational literal too large");
            ++pos;
        }
    } else if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) return fail();
        den = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            den = den * 10 + (text[pos] - '0');
            if (den > INT64_MAX) throw arithmetic_overflow("rational literal too large");
            ++pos;
        }
    }
    if (pos != text.size()) return fail();
    if (negative) num = -num;
    return reduce(num, den);
}

std::string Rational::str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
}

}  // namespace tropical
