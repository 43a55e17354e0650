#pragma once

// Ideal triangulations given by face-gluing tables, and the layered
// (monodromy) triangulation of a once-punctured torus bundle.
//
// Conventions follow the usual cusped-triangulation format: face i of a
// tetrahedron is the face opposite vertex i, and gluing (t, f) -> (t', perm)
// identifies face f of t with face perm[f] of t', vertex v going to perm[v].
//
// Tetrahedron edges are indexed 0..5 as the vertex pairs
//     01, 02, 03, 12, 13, 23
// so edge e and edge 5 - e are opposite.
//
// Layered tetrahedra are labelled so that faces 0 and 1 are the bottom pair
// (the square before the elementary move, sharing the old diagonal, edge 23)
// and faces 2 and 3 are the top pair (sharing the new diagonal, edge 01).

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tb/farey.hpp"

namespace tb {

struct NotPseudoAnosov : std::domain_error {
    using std::domain_error::domain_error;
};
struct InvalidTriangulation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EulerViolation : std::logic_error {
    using std::logic_error::logic_error;
};
struct NoInvolution : std::logic_error {
    using std::logic_error::logic_error;
};

class Perm4 {
public:
    constexpr Perm4() : image_{0, 1, 2, 3} {}
    constexpr Perm4(int a, int b, int c, int d)
        : image_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c),
                 static_cast<std::uint8_t>(d)} {}

    // Throws std::invalid_argument unless the four images are 0..3 in some order.
    static Perm4 checked(int a, int b, int c, int d);
    static const std::array<Perm4, 24>& all();

    int operator[](int i) const { return image_[static_cast<std::size_t>(i)]; }
    Perm4 inverse() const;
    int sign() const;
    bool is_identity() const { return *this == Perm4{}; }
    bool is_double_transposition() const;

    // (p * q)[i] = p[q[i]]
    friend Perm4 operator*(const Perm4& p, const Perm4& q);
    friend bool operator==(const Perm4&, const Perm4&) = default;
    friend auto operator<=>(const Perm4&, const Perm4&) = default;

    std::string str() const;  // e.g. "1032"

private:
    std::array<std::uint8_t, 4> image_;
};

inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
int edge_index(int a, int b);

struct FaceGluing {
    int tet = -1;
    Perm4 perm;
    friend bool operator==(const FaceGluing&, const FaceGluing&) = default;
};

// Raw, unchecked table: entry [t][f] says where face f of tetrahedron t goes.
using GluingTable = std::vector<std::array<FaceGluing, 4>>;

// Every defect of a raw table (bad indices, unglued faces, non-involutive or
// even gluings). Empty when the table describes a valid oriented triangulation.
std::vector<std::string> gluing_defects(const GluingTable& table);

class Triangulation {
public:
    // Throws InvalidTriangulation listing gluing_defects() when there are any.
    explicit Triangulation(GluingTable table, std::optional<MonodromyWord> word = std::nullopt);

    int size() const { return static_cast<int>(table_.size()); }
    const FaceGluing& gluing(int tet, int face) const { return table_[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)]; }
    const GluingTable& table() const { return table_; }
    const std::optional<MonodromyWord>& word() const { return word_; }

private:
    GluingTable table_;
    std::optional<MonodromyWord> word_;
};

// One tetrahedron per letter; the top of the stack is glued to the bottom by
// the inverse of the monodromy sign * W. Throws NotPseudoAnosov unless the
// word contains both letters.
Triangulation build_monodromy_triangulation(const MonodromyWord& w);

struct Corner {
    int tet = 0;
    int edge = 0;
    friend bool operator==(const Corner&, const Corner&) = default;
    friend auto operator<=>(const Corner&, const Corner&) = default;
};

struct EdgeClass {
    // Cyclic order around the edge, starting at the least corner.
    std::vector<Corner> corners;
    // tails[i] is the vertex of corners[i] that is the tail of the edge under the
    // orientation carried consistently around the cycle.
    std::vector<int> tails;

    int valence() const { return static_cast<int>(corners.size()); }
};

// Sorted by first corner.
std::vector<EdgeClass> compute_edge_classes(const Triangulation& t);

struct EulerReport {
    int edges = 0;  // e
    int faces = 0;  // f
    int tets = 0;   // p
    int value() const { return edges - faces + tets; }
};

// Throws EulerViolation when e - f + p != 0.
EulerReport euler_check(const Triangulation& t);

struct CuspReport {
    int components = 0;
    std::vector<int> euler;  // per component, ordered by least (tet, vertex)
    int vertex_orbits = 0;   // ideal vertices after identification
};

CuspReport vertex_link(const Triangulation& t);

// Per-tetrahedron target and vertex map.
struct Automorphism {
    std::vector<int> tet_image;
    std::vector<Perm4> perm;

    static Automorphism identity(int n);
    Automorphism compose(const Automorphism& other) const;  // this after other
    bool is_identity() const;
    friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

bool is_automorphism(const Triangulation& t, const Automorphism& a);

// The fibre-preserving involution: fixes every tetrahedron, acts on each by a
// double transposition, and maps every edge class to itself with its
// orientation reversed. Throws NoInvolution when no such map exists.
Automorphism find_involution(const Triangulation& t);

// Whether the automorphism preserves the class (as a set of corners) and
// reverses the class orientation.
bool reverses_edge(const Triangulation& t, const EdgeClass& e, const Automorphism& a);

// Search over all images of tetrahedron 0; both triangulations must be connected.
std::optional<Automorphism> find_isomorphism(const Triangulation& t1, const Triangulation& t2);
bool are_isomorphic(const Triangulation& t1, const Triangulation& t2);

}  // namespace tb
