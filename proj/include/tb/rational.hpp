#pragma once

// Exact rational numbers over 64-bit integers.
//
// Always reduced, denominator positive, zero is 0/1. Every operation widens
// to 128 bits and throws std::overflow_error if the reduced result does not
// fit back into 64 bits, so a result is either exact or an exception.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace tb {

class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design of a number type
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "p/q", or "p" when the value is an integer.
    std::string str() const;
    // Inverse of str(); also accepts unreduced input. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

private:
    static Rational from_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tb
