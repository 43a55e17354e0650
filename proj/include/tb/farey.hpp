#pragma once

// SL(2,Z) arithmetic and the Farey tessellation.
//
// Generator convention (everything downstream depends on it):
//
//     R = [[1,1],[0,1]]      L = [[1,0],[1,1]]
//
// A word w = x1 x2 ... xn means the matrix product x1 * x2 * ... * xn. A
// slope p/q is the column vector (p, q) up to sign; the ideal triangulation of
// the punctured torus attached to a basis matrix B has the three slopes
// col1(B), col2(B) and col1(B) + col2(B). Right-multiplying B by R or L walks
// one step through the dual tree of the tessellation.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tb {

struct NotNeighbours : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotHyperbolic : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotUnimodular : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A slope p/q, stored canonically: gcd(|p|,|q|) = 1 and q > 0, or 1/0 for infinity.
class Slope {
public:
    Slope() = default;
    // Throws std::invalid_argument if (p, q) is not primitive.
    Slope(std::int64_t p, std::int64_t q);

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    bool is_infinity() const { return q_ == 0; }

    std::string str() const;  // "p/q", with infinity as "1/0"

    friend bool operator==(const Slope&, const Slope&) = default;
    friend auto operator<=>(const Slope&, const Slope&) = default;

private:
    std::int64_t p_ = 1;
    std::int64_t q_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

bool is_farey_neighbor(const Slope& s1, const Slope& s2);

// (p1+p2)/(q1+q2) of the canonical representatives. Throws NotNeighbours.
Slope mediant(const Slope& s1, const Slope& s2);

// Row-major 2x2 integer matrix of determinant 1.
struct UnimodularMatrix {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    static UnimodularMatrix identity() { return {}; }
    static UnimodularMatrix R() { return {1, 1, 0, 1}; }
    static UnimodularMatrix L() { return {1, 0, 1, 1}; }

    // Throws NotUnimodular unless ad - bc = 1.
    static UnimodularMatrix checked(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
    // "a,b;c,d". Throws std::invalid_argument on malformed text, NotUnimodular
    // on a well-formed matrix of the wrong determinant.
    static UnimodularMatrix parse(std::string_view text);

    std::int64_t det() const { return a * d - b * c; }
    std::int64_t trace() const { return a + d; }
    UnimodularMatrix inverse() const { return {d, -b, -c, a}; }
    UnimodularMatrix operator-() const { return {-a, -b, -c, -d}; }

    friend UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y);
    friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

    std::string str() const;  // "a,b;c,d"
};

std::ostream& operator<<(std::ostream& os, const UnimodularMatrix& m);

enum class Letter : char { R = 'R', L = 'L' };

UnimodularMatrix generator(Letter x);

// A cyclic word over {R, L} with a sign, normalised to its lexicographically
// least rotation under R < L. Validity as a monodromy (both letters present)
// is checked where it matters: by factorize() and the triangulation builder.
class MonodromyWord {
public:
    // Throws std::invalid_argument on an empty word or a letter outside {R, L}.
    explicit MonodromyWord(std::string_view letters, int sign = +1);

    // Optional leading '-' selects sign -1.
    static MonodromyWord parse(std::string_view text);

    const std::vector<Letter>& letters() const { return letters_; }
    int sign() const { return sign_; }
    std::size_t size() const { return letters_.size(); }
    bool has_both_letters() const;

    std::string letter_string() const;  // e.g. "RRL"
    std::string str() const;            // with a leading '-' when sign is -1

    friend bool operator==(const MonodromyWord&, const MonodromyWord&) = default;

private:
    std::vector<Letter> letters_;
    int sign_ = +1;
};

std::ostream& operator<<(std::ostream& os, const MonodromyWord& w);

// Lexicographically least rotation under R < L of a raw letter string.
std::string canonical_rotation(std::string_view letters);

UnimodularMatrix matrix_of_word(const MonodromyWord& w);

// RL-normal form of the conjugacy class of m. Throws NotHyperbolic when
// |trace| <= 2, NotUnimodular when det(m) != 1.
MonodromyWord factorize(const UnimodularMatrix& m);

// Same, also returning an explicit conjugator h with h^-1 * m * h = matrix_of_word(result).
struct Factorization {
    MonodromyWord word;
    UnimodularMatrix conjugator;
};
Factorization factorize_with_conjugator(const UnimodularMatrix& m);

struct FareyTriangle {
    std::array<Slope, 3> slopes;  // sorted

    static FareyTriangle of(Slope a, Slope b, Slope c);  // throws NotNeighbours
    bool contains(const Slope& s) const;
    friend bool operator==(const FareyTriangle&, const FareyTriangle&) = default;
};

// A vertex of the dual tree of the tessellation together with an orientation:
// the basis matrix B whose columns are the first two slopes. Two markings that
// differ by the sign of B are the same ideal triangulation.
struct SurfaceMarking {
    UnimodularMatrix basis;

    FareyTriangle triangle() const;
    Slope first() const;
    Slope second() const;
    Slope third() const;  // col1 + col2, the most recently introduced slope
};

SurfaceMarking elementary_move(const SurfaceMarking& m, Letter x);
SurfaceMarking inverse_elementary_move(const SurfaceMarking& m, Letter x);

}  // namespace tb
