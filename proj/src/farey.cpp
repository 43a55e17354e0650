#include "tb/farey.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <charconv>
#include <map>
#include <numeric>
#include <ostream>
#include <utility>

namespace tb {

using boost::multiprecision::cpp_int;

Slope::Slope(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("slope " + std::to_string(p) + "/" + std::to_string(q) + " is not reduced");
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    p_ = p;
    q_ = q;
}

std::string Slope::str() const {
    return std::to_string(p_) + "/" + std::to_string(q_);
}

std::ostream& operator<<(std::ostream& os, const Slope& s) {
    return os << s.str();
}

bool is_farey_neighbor(const Slope& s1, const Slope& s2) {
    std::int64_t det = s1.p() * s2.q() - s2.p() * s1.q();
    return det == 1 || det == -1;
}

Slope mediant(const Slope& s1, const Slope& s2) {
    if (!is_farey_neighbor(s1, s2)) throw NotNeighbours("mediant: " + s1.str() + " and " + s2.str() + " are not Farey neighbours");
    return Slope(s1.p() + s2.p(), s1.q() + s2.q());
}

UnimodularMatrix UnimodularMatrix::checked(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    UnimodularMatrix m{a, b, c, d};
    if (m.det() != 1) throw NotUnimodular("matrix " + m.str() + " has determinant " + std::to_string(m.det()));
    return m;
}

UnimodularMatrix UnimodularMatrix::parse(std::string_view text) {
    std::array<std::int64_t, 4> v{};
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        char sep = i == 1 ? ';' : ',';
        std::size_t end = i == 3 ? text.size() : text.find(sep, pos);
        if (end == std::string_view::npos) throw std::invalid_argument("malformed matrix '" + std::string(text) + "', expected a,b;c,d");
        std::string_view part = text.substr(pos, end - pos);
        while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
        while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
        if (!part.empty() && part.front() == '+') part.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v[i]);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
            throw std::invalid_argument("malformed matrix '" + std::string(text) + "', expected a,b;c,d");
        pos = end + 1;
    }
    return checked(v[0], v[1], v[2], v[3]);
}

UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::string UnimodularMatrix::str() const {
    return std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + "," + std::to_string(d);
}

std::ostream& operator<<(std::ostream& os, const UnimodularMatrix& m) {
    return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
}

UnimodularMatrix generator(Letter x) {
    return x == Letter::R ? UnimodularMatrix::R() : UnimodularMatrix::L();
}

namespace {

// R sorts before L.
int letter_rank(char c) { return c == 'R' ? 0 : 1; }

bool rotation_less(std::string_view s, std::size_t i, std::size_t j) {
    const std::size_t n = s.size();
    for (std::size_t k = 0; k < n; ++k) {
        int a = letter_rank(s[(i + k) % n]);
        int b = letter_rank(s[(j + k) % n]);
        if (a != b) return a < b;
    }
    return false;
}

}  // namespace

std::string canonical_rotation(std::string_view letters) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < letters.size(); ++i)
        if (rotation_less(letters, i, best)) best = i;
    std::string out;
    out.reserve(letters.size());
    for (std::size_t k = 0; k < letters.size(); ++k) out.push_back(letters[(best + k) % letters.size()]);
    return out;
}

MonodromyWord::MonodromyWord(std::string_view letters, int sign) : sign_(sign) {
    if (letters.empty()) throw std::invalid_argument("empty monodromy word");
    if (sign != 1 && sign != -1) throw std::invalid_argument("monodromy sign must be +1 or -1");
    for (char c : letters)
        if (c != 'R' && c != 'L') throw std::invalid_argument(std::string("invalid letter '") + c + "' in monodromy word");
    for (char c : canonical_rotation(letters)) letters_.push_back(static_cast<Letter>(c));
}

MonodromyWord MonodromyWord::parse(std::string_view text) {
    if (!text.empty() && text.front() == '-') return MonodromyWord(text.substr(1), -1);
    if (!text.empty() && text.front() == '+') return MonodromyWord(text.substr(1), +1);
    return MonodromyWord(text, +1);
}

bool MonodromyWord::has_both_letters() const {
    bool r = std::find(letters_.begin(), letters_.end(), Letter::R) != letters_.end();
    bool l = std::find(letters_.begin(), letters_.end(), Letter::L) != letters_.end();
    return r && l;
}

std::string MonodromyWord::letter_string() const {
    std::string s;
    for (Letter x : letters_) s.push_back(static_cast<char>(x));
    return s;
}

std::string MonodromyWord::str() const {
    return (sign_ < 0 ? "-" : "") + letter_string();
}

std::ostream& operator<<(std::ostream& os, const MonodromyWord& w) {
    return os << w.str();
}

UnimodularMatrix matrix_of_word(const MonodromyWord& w) {
    UnimodularMatrix m;
    for (Letter x : w.letters()) m = m * generator(x);
    return w.sign() < 0 ? -m : m;
}

namespace {

struct BigMatrix {
    cpp_int a = 1, b = 0, c = 0, d = 1;

    friend BigMatrix operator*(const BigMatrix& x, const BigMatrix& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const BigMatrix&, const BigMatrix&) = default;
};

BigMatrix big(const UnimodularMatrix& m) { return {m.a, m.b, m.c, m.d}; }

BigMatrix letter_power(bool is_r, const cpp_int& k) {
    return is_r ? BigMatrix{1, k, 0, 1} : BigMatrix{1, 0, k, 1};
}

cpp_int floor_div(const cpp_int& n, const cpp_int& d) {
    cpp_int q = n / d;  // truncates toward zero
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}

std::int64_t narrow(const cpp_int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("factorize: entry exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

}  // namespace

Factorization factorize_with_conjugator(const UnimodularMatrix& m) {
    if (m.det() != 1) throw NotUnimodular("factorize: determinant of " + m.str() + " is not 1");
    if (m.trace() >= -2 && m.trace() <= 2)
        throw NotHyperbolic("monodromy " + m.str() + " has trace " + std::to_string(m.trace()) + "; it is periodic or reducible, not hyperbolic");

    const int sign = m.trace() > 0 ? +1 : -1;
    const UnimodularMatrix pos = sign > 0 ? m : -m;

    // The attracting fixed point of x -> (ax+b)/(cx+d) is (a - d + sqrt(D)) / (2c)
    // with D = trace^2 - 4. Its continued fraction is eventually periodic, and the
    // period read as R^a0 L^a1 R^a2 ... is the positive word of the class.
    const cpp_int D = cpp_int(pos.trace()) * pos.trace() - 4;
    const cpp_int s = boost::multiprecision::sqrt(D);
    cpp_int P = pos.a - pos.d;
    cpp_int Q = 2 * cpp_int(pos.c);

    std::vector<cpp_int> quotients;
    std::map<std::pair<cpp_int, cpp_int>, std::size_t> seen;
    std::size_t period_start = 0;
    for (;;) {
        auto [it, fresh] = seen.emplace(std::make_pair(P, Q), quotients.size());
        if (!fresh) {
            period_start = it->second;
            break;
        }
        cpp_int q = Q > 0 ? floor_div(P + s, Q) : -floor_div(P + s, -Q) - 1;
        quotients.push_back(q);
        P = q * Q - P;
        Q = (D - P * P) / Q;
    }
    std::size_t period = quotients.size() - period_start;

    // Letters alternate R, L by index parity, so the period must be read from an
    // even index; an odd period has to be traversed twice to return to R.
    std::size_t start = period_start;
    if (start % 2 == 1) ++start;
    const std::size_t reps = period % 2 == 1 ? 2 : 1;
    std::vector<cpp_int> block;
    for (std::size_t k = 0; k < period * reps; ++k) block.push_back(quotients[period_start + (start - period_start + k) % period]);

    BigMatrix h;
    for (std::size_t k = 0; k < start; ++k) h = h * letter_power(k % 2 == 0, quotients[k]);

    std::string primitive;
    BigMatrix w0;
    for (std::size_t k = 0; k < block.size(); ++k) {
        w0 = w0 * letter_power(k % 2 == 0, block[k]);
        primitive.append(static_cast<std::size_t>(block[k]), k % 2 == 0 ? 'R' : 'L');
    }

    // m is conjugate to a power of the primitive word; the power is fixed by the trace.
    const BigMatrix target = [&] {
        BigMatrix hinv{h.d, -h.b, -h.c, h.a};
        return hinv * big(pos) * h;
    }();
    std::string letters;
    BigMatrix w;
    while (w.a + w.d < target.a + target.d) {
        w = w * w0;
        letters += primitive;
    }
    if (!(w == target)) throw std::logic_error("factorize: conjugacy check failed for " + m.str());

    Factorization f{MonodromyWord(letters, sign), UnimodularMatrix{narrow(h.a), narrow(h.b), narrow(h.c), narrow(h.d)}};
    // The stored word is a rotation of `letters`; move the conjugator to match it.
    std::string canon = f.word.letter_string();
    for (std::size_t r = 0; r < letters.size(); ++r) {
        std::string rot = letters.substr(r) + letters.substr(0, r);
        if (rot != canon) continue;
        for (std::size_t k = 0; k < r; ++k) f.conjugator = f.conjugator * generator(static_cast<Letter>(letters[k]));
        break;
    }
    return f;
}

MonodromyWord factorize(const UnimodularMatrix& m) {
    return factorize_with_conjugator(m).word;
}

FareyTriangle FareyTriangle::of(Slope a, Slope b, Slope c) {
    if (!is_farey_neighbor(a, b) || !is_farey_neighbor(b, c) || !is_farey_neighbor(a, c))
        throw NotNeighbours("slopes " + a.str() + ", " + b.str() + ", " + c.str() + " do not form a Farey triangle");
    FareyTriangle t{{a, b, c}};
    std::sort(t.slopes.begin(), t.slopes.end());
    return t;
}

bool FareyTriangle::contains(const Slope& s) const {
    return std::find(slopes.begin(), slopes.end(), s) != slopes.end();
}

Slope SurfaceMarking::first() const { return Slope(basis.a, basis.c); }
Slope SurfaceMarking::second() const { return Slope(basis.b, basis.d); }
Slope SurfaceMarking::third() const { return Slope(basis.a + basis.b, basis.c + basis.d); }

FareyTriangle SurfaceMarking::triangle() const {
    return FareyTriangle::of(first(), second(), third());
}

SurfaceMarking elementary_move(const SurfaceMarking& m, Letter x) {
    return {m.basis * generator(x)};
}

SurfaceMarking inverse_elementary_move(const SurfaceMarking& m, Letter x) {
    return {m.basis * generator(x).inverse()};
}

}  // namespace tb
