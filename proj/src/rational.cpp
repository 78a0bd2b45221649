#include "drsrd/rational.hpp"

#include <cstdlib>
#include <numeric>

#include "drsrd/error.hpp"

namespace drsrd {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator <= 0 || numerator < 0)
        throw Error("rational requires numerator >= 0 and denominator > 0");
    const std::int64_t g = std::gcd(numerator, denominator);
    num_ = numerator / (g == 0 ? 1 : g);
    den_ = denominator / (g == 0 ? 1 : g);
}

Rational Rational::parse_decimal(std::string_view text) {
    if (text.empty())
        throw Error("empty decimal literal");
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool seen_digit = false;
    bool seen_dot = false;
    for (char c : text) {
        if (c == '.') {
            if (seen_dot)
                throw Error("malformed decimal literal '" + std::string(text) + "'");
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9')
            throw Error("malformed decimal literal '" + std::string(text) + "'");
        seen_digit = true;
        if (num > (INT64_MAX - 9) / 10 || (seen_dot && den > INT64_MAX / 10))
            throw Error("decimal literal out of range '" + std::string(text) + "'");
        num = num * 10 + (c - '0');
        if (seen_dot)
            den *= 10;
    }
    if (!seen_digit)
        throw Error("malformed decimal literal '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string Rational::str() const {
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

Rational operator+(const Rational& a, const Rational& b) {
    const __int128 num = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    const __int128 den = static_cast<__int128>(a.den_) * b.den_;
    if (num > INT64_MAX || den > INT64_MAX)
        throw Error("rational sum out of range");
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

Rational rational_mean(const Rational* first, std::size_t count) {
    if (count == 0)
        throw Error("mean of empty set");
    Rational sum;
    for (std::size_t i = 0; i < count; ++i)
        sum = sum + first[i];
    return Rational(sum.numerator(), sum.denominator() * static_cast<std::int64_t>(count));
}

}  // namespace drsrd
