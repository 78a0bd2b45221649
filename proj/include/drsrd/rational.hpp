#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace drsrd {

// Exact non-negative rational on int64. Used wherever a threshold comparison
// must not depend on floating-point rounding: transfer coefficients (block
// size ratios), transfer standards (weight means), request weights and the
// generator's certainty rate.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t numerator, std::int64_t denominator);

    static Rational from_int(std::int64_t v) { return Rational(v, 1); }

    // Parses a plain decimal such as "0.85", "1", ".3" or "0.125" exactly.
    // Throws drsrd::Error on anything else (signs, exponents, empty input).
    static Rational parse_decimal(std::string_view text);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    double as_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator+(const Rational& a, const Rational& b);

private:
    std::int64_t num_;
    std::int64_t den_;  // > 0, gcd(num_, den_) == 1
};

// Mean of a non-empty range of rationals, computed exactly.
Rational rational_mean(const Rational* first, std::size_t count);

}  // namespace drsrd
