#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace ultratree {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exponent in a value group (1/e)Z, extended with +/- infinity sentinels.
/// Valuations of nonzero elements are finite; the zero element carries
/// valuation +infinity and norm exponent -infinity.
class RationalExponent {
public:
    RationalExponent() : kind_(Kind::Finite), value_(0) {}
    RationalExponent(long long num, long long den) : kind_(Kind::Finite), value_(num, den) {
        if (den == 0) throw std::invalid_argument("RationalExponent: zero denominator");
    }
    explicit RationalExponent(Rat v) : kind_(Kind::Finite), value_(std::move(v)) {}
    static RationalExponent from_int(long long n) { return RationalExponent(Rat(n)); }
    static RationalExponent infinity() { return RationalExponent(Kind::PosInf); }
    static RationalExponent neg_infinity() { return RationalExponent(Kind::NegInf); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_pos_infinity() const { return kind_ == Kind::PosInf; }
    bool is_neg_infinity() const { return kind_ == Kind::NegInf; }

    const Rat& value() const {
        if (!is_finite()) throw std::domain_error("RationalExponent: infinite value");
        return value_;
    }

    friend bool operator==(const RationalExponent& a, const RationalExponent& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.value_ == b.value_;
    }
    friend bool operator<(const RationalExponent& a, const RationalExponent& b) {
        if (a.kind_ == Kind::NegInf) return b.kind_ != Kind::NegInf;
        if (a.kind_ == Kind::PosInf) return false;
        if (b.kind_ == Kind::PosInf) return true;
        if (b.kind_ == Kind::NegInf) return false;
        return a.value_ < b.value_;
    }
    friend bool operator!=(const RationalExponent& a, const RationalExponent& b) { return !(a == b); }
    friend bool operator>(const RationalExponent& a, const RationalExponent& b) { return b < a; }
    friend bool operator<=(const RationalExponent& a, const RationalExponent& b) { return !(b < a); }
    friend bool operator>=(const RationalExponent& a, const RationalExponent& b) { return !(a < b); }

    // Addition follows valuation arithmetic: an infinity absorbs any finite
    // term; opposite infinities are undefined.
    friend RationalExponent operator+(const RationalExponent& a, const RationalExponent& b) {
        if (a.is_finite() && b.is_finite()) return RationalExponent(a.value_ + b.value_);
        if (a.is_pos_infinity() && !b.is_neg_infinity()) return infinity();
        if (b.is_pos_infinity() && !a.is_neg_infinity()) return infinity();
        if (a.is_neg_infinity() && !b.is_pos_infinity()) return neg_infinity();
        if (b.is_neg_infinity() && !a.is_pos_infinity()) return neg_infinity();
        throw std::domain_error("RationalExponent: inf + -inf");
    }
    friend RationalExponent operator-(const RationalExponent& a) {
        if (a.is_pos_infinity()) return neg_infinity();
        if (a.is_neg_infinity()) return infinity();
        return RationalExponent(-a.value_);
    }
    friend RationalExponent operator-(const RationalExponent& a, const RationalExponent& b) {
        return a + (-b);
    }

    std::string str() const {
        if (is_pos_infinity()) return "inf";
        if (is_neg_infinity()) return "-inf";
        return value_.str();
    }

private:
    enum class Kind { NegInf, Finite, PosInf };
    explicit RationalExponent(Kind k) : kind_(k), value_(0) {}
    Kind kind_;
    Rat value_;
};

inline RationalExponent max(const RationalExponent& a, const RationalExponent& b) {
    return a < b ? b : a;
}
inline RationalExponent min(const RationalExponent& a, const RationalExponent& b) {
    return b < a ? b : a;
}

/// Exact e*w for a finite exponent w whose denominator divides e.
inline long long pi_index(const RationalExponent& w, long long e) {
    const Rat scaled = w.value() * e;
    if (boost::multiprecision::denominator(scaled) != 1)
        throw std::invalid_argument("exponent " + w.str() + " is not in (1/" + std::to_string(e) +
                                    ")Z");
    return static_cast<long long>(boost::multiprecision::numerator(scaled));
}

/// The exponent m/e, reduced.
inline RationalExponent exponent_from_pi_index(long long m, long long e) {
    return RationalExponent(Rat(m, e));
}

}  // namespace ultratree
