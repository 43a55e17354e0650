#pragma once

// Fairly normal discs in a truncated tetrahedron, described by their boundary
// curves on the truncated boundary sphere (the spanning disc in the ball is
// then unique up to isotopy).
//
// A curve is stored as the points where it crosses 1-cells, each point being
// (1-cell, position along the cell's direction, counted from 0), and as its
// arcs in each 2-cell. Hexagon arcs join points on distinct non-adjacent
// sides. A triangle carries at most one arc, either across two sides or
// returning to the side it entered by.
//
// Areas are in units of pi. For a disc crossing interior edge e c_e times and
// boundary faces k times,
//
//     area(theta) = sum_e c_e (1 - theta_e) + k - 2.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "tb/angles.hpp"
#include "tb/rational.hpp"
#include "tb/truncated.hpp"

namespace tb {

struct CurvePoint {
    int cell = 0;
    int pos = 0;
    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
    friend auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

struct Chord {
    CurvePoint a, b;  // a < b
    friend bool operator==(const Chord&, const Chord&) = default;
    friend auto operator<=>(const Chord&, const Chord&) = default;
};

enum class DiscTag { VertexLink, Bigon, WeakBigon, Arclike, ModifiedVertexLink, FusedVertexLink, Generic };

std::string to_string(DiscTag tag);

struct DiscType {
    std::array<int, kInteriorEdgeCount> crossings{};
    std::array<std::vector<Chord>, 4> hexagon_arcs;   // by hexagon f
    std::array<std::vector<Chord>, 4> triangle_arcs;  // by triangle v
    DiscTag tag = DiscTag::Generic;

    // Builds a curve from its arcs; point counts per 1-cell are read off the
    // arcs. No validity checks: see fairly_normal_defects().
    static DiscType from_arcs(std::array<std::vector<Chord>, 4> hexagon_arcs, std::array<std::vector<Chord>, 4> triangle_arcs);

    int boundary_arcs() const;
    int points_on(int cell) const;
    // Canonical text form of the arcs; equal keys mean the same labelled type.
    std::string key() const;
};

// Canonical small types.
DiscType vertex_link_disc(int v);
DiscType bigon_disc(int edge);
// Quad separating edge `edge` and its opposite (edge in 0..2).
DiscType quad_disc(int edge);

// Every violated fairly-normal condition, plus structural defects (points not
// used exactly once per incident cell, crossing arcs, more than one curve).
std::vector<std::string> fairly_normal_defects(const DiscType& d);

// All fairly normal types, each tagged, in a fixed order.
std::vector<DiscType> enumerate_fairly_normal_types();

DiscTag classify(const DiscType& d);

// Relabel the tetrahedron's vertices by s (a permutation of 0..3).
DiscType relabel(const DiscType& d, const std::array<int, 4>& s);
// Number of orbits of the given types under the 24 vertex relabellings.
int count_orbits(const std::vector<DiscType>& types);

struct AreaFunctional {
    std::array<int, kInteriorEdgeCount> coefficient{};  // c_e, multiplying (1 - theta_e)
    int boundary_arcs = 0;
    Rational constant() const { return Rational(boundary_arcs - 2); }
    // theta holds the six interior angles of the tetrahedron, in units of pi.
    Rational evaluate(const std::array<Rational, 6>& theta) const;
};

AreaFunctional area_expr(const DiscType& d);

struct FaceCompression {
    bool exists = false;
    // Only meaningful for arclike discs; for others both equal `exists`.
    bool on_arc_side = false;
    bool off_arc_side = false;
};

FaceCompression has_face_compression(const DiscType& d);

// Extremes of the area over the closed local polytope: theta in [0, 1] and
// the vertex equalities of `c` (normally single_tetrahedron_system()).
Rational min_area_over_polytope(const DiscType& d, const ConstraintSystem& c);
Rational max_area_over_polytope(const DiscType& d, const ConstraintSystem& c);

// Summary of the two sides of the curve on the boundary sphere.
struct SideSummary {
    std::vector<int> corners;                         // sorted corner ids
    std::vector<std::pair<int, int>> interior_segments;  // (edge, segment index)
    int hexagon_pieces = 0;
    int triangle_pieces = 0;
    bool touches_interior_edges() const { return !interior_segments.empty() || !corners.empty(); }
};

struct CurveSides {
    bool simple_closed = false;  // one curve and the complement has two sides
    std::array<SideSummary, 2> sides;
};

CurveSides curve_sides(const DiscType& d);

}  // namespace tb
