#pragma once

#include <compare>
#include <string>

#include "tropical/rational.hpp"

namespace tropical {

/// Element of the max-plus semiring: a finite rational or BOTTOM (-inf).
///
/// Semiring operations are spelled as operators: `a + b` is max and `a * b`
/// is classical addition, with BOTTOM as the absorbing zero. The natural
/// order a <= b <=> a + b == b coincides with operator<=>, so the comparison
/// operators are the partial-order tests. Default construction yields BOTTOM,
/// the additive identity.
class Scalar {
public:
    constexpr Scalar() = default;
    explicit constexpr Scalar(Rational v) : finite_(true), value_(v) {}

    static constexpr Scalar bottom() { return Scalar(); }
    /// Additive identity (-inf).
    static constexpr Scalar zero() { return Scalar(); }
    /// Multiplicative identity (the number 0).
    static constexpr Scalar one() { return Scalar(Rational(0)); }
    static constexpr Scalar of(std::int64_t v) { return Scalar(Rational(v)); }

    bool is_bottom() const { return !finite_; }
    bool finite() const { return finite_; }

    const Rational& rational() const {
        if (!finite_) throw precondition_error("rational() on -inf");
        return value_;
    }

    std::string str() const { return finite_ ? value_.str() : "-inf"; }

    friend Scalar operator+(Scalar a, Scalar b) {  // max
        if (!a.finite_) return b;
        if (!b.finite_) return a;
        return a.value_ < b.value_ ? b : a;
    }
    friend Scalar operator*(Scalar a, Scalar b) {  // classical addition
        if (!a.finite_ || !b.finite_) return bottom();
        return Scalar(a.value_ + b.value_);
    }
    friend Scalar min(Scalar a, Scalar b) {
        if (!a.finite_ || !b.finite_) return bottom();
        return a.value_ < b.value_ ? a : b;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
        if (!a.finite_) return std::strong_ordering::less;
        if (!b.finite_) return std::strong_ordering::greater;
        return a.value_ <=> b.value_;
    }

private:
    bool finite_ = false;
    Rational value_{};
};

/// Element of the dual (min-plus) side used by residuation: BOTTOM, a finite
/// rational, or TOP (+inf). TOP is absorbing for the min-plus product so that
/// division by the max-plus zero reads "unconstrained".
class UpperScalar {
public:
    constexpr UpperScalar() = default;
    explicit constexpr UpperScalar(Rational v) : kind_(Kind::finite), value_(v) {}

    static constexpr UpperScalar bottom() { return UpperScalar(Kind::bottom); }
    static constexpr UpperScalar top() { return UpperScalar(Kind::top); }
    static UpperScalar of(Scalar s) {
        return s.is_bottom() ? bottom() : UpperScalar(s.rational());
    }

    /// The inversion map: finite a -> -a, BOTTOM -> TOP.
    static UpperScalar inverse(Scalar s) {
        return s.is_bottom() ? top() : UpperScalar(-s.rational());
    }

    bool is_bottom() const { return kind_ == Kind::bottom; }
    bool is_top() const { return kind_ == Kind::top; }
    bool finite() const { return kind_ == Kind::finite; }

    const Rational& rational() const {
        if (kind_ != Kind::finite) throw precondition_error("rational() on non-finite value");
        return value_;
    }

    /// Replace TOP by the given finite stand-in; BOTTOM and finite map across.
    Scalar clamp(Scalar top_value) const {
        switch (kind_) {
            case Kind::bottom: return Scalar::bottom();
            case Kind::finite: return Scalar(value_);
            default: return top_value;
        }
    }

    std::string str() const {
        switch (kind_) {
            case Kind::bottom: return "-inf";
            case Kind::finite: return value_.str();
            default: return "+inf";
        }
    }

    /// Min-plus product against a max-plus scalar. TOP wins over everything,
    /// including BOTTOM; otherwise BOTTOM absorbs.
    friend UpperScalar minplus_mul(UpperScalar a, Scalar b) {
        if (a.is_top()) return top();
        if (a.is_bottom() || b.is_bottom()) return bottom();
        return UpperScalar(a.value_ + b.rational());
    }

    friend UpperScalar min(UpperScalar a, UpperScalar b) { return a <= b ? a : b; }

    friend bool operator==(const UpperScalar& a, const UpperScalar& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::finite || a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const UpperScalar& a, const UpperScalar& b) {
        if (a.kind_ != b.kind_)
            return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
        if (a.kind_ != Kind::finite) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }

private:
    enum class Kind : int { bottom = 0, finite = 1, top = 2 };
    explicit constexpr UpperScalar(Kind k) : kind_(k) {}

    Kind kind_ = Kind::bottom;
    Rational value_{};
};

}  // namespace tropical
