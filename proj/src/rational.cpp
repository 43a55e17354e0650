#include "tb/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace tb {

namespace {

__int128 abs128(__int128 x) { return x < 0 ? -x : x; }

__int128 gcd128(__int128 a, __int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(__int128 x) {
    return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    if (!fits64(n) || !fits64(d)) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational Rational::operator-() const {
    return from_wide(-static_cast<__int128>(num_), den_);
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == o.den_) return *this = from_wide(static_cast<__int128>(num_) + o.num_, den_);
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& o) {
    return *this += -o;
}

Rational& Rational::operator*=(const Rational& o) {
    if (num_ == 0 || o.num_ == 0) return *this = Rational{};
    // Cross-reduce first so the 128-bit product stays small.
    __int128 g1 = gcd128(num_, o.den_);
    __int128 g2 = gcd128(o.num_, den_);
    __int128 n = (num_ / g1) * (o.num_ / g2);
    __int128 d = (den_ / g2) * (o.den_ / g1);
    return *this = from_wide(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    Rational inv;
    inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
    inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
    return *this *= inv;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        std::int64_t v = 0;
        if (part.empty()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size())
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    std::int64_t d = parse_int(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace tb
