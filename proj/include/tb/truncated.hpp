#pragma once

// Cell structure of a truncated tetrahedron.
//
// 0-cells: corner (v, w) is the end of interior edge vw inside the boundary
//          triangle at v; id 4v + w.
// 1-cells: ids 0..5 are the interior edges (same order as tetrahedron edges),
//          ids 6..17 the boundary edges. Boundary edge B(v, f) is the side of
//          triangle v lying in hexagon f.
// 2-cells: hexagon f (truncated face opposite f) and triangle v (link of v).
//
// Every 1-cell carries a fixed direction used to place points along it:
// interior edge ab (a < b) runs from corner (a, b) to corner (b, a); boundary
// edge B(v, f) runs from (v, x) to (v, y) where x < y are the two vertices
// other than v and f.
//
// Hexagon f with vertices x < y < z is traversed
//
//        (x,y) --ab--> (y,x) --B(y,f)--> (y,z) --yz--> (z,y) --B(z,f)--> (z,x) --zx--> (x,z) --B(x,f)--> back
//
// so sides 0, 2, 4 are interior and 1, 3, 5 are boundary edges; two sides are
// adjacent when they share a corner.

#include <array>
#include <vector>

namespace tb {

inline constexpr int kInteriorEdgeCount = 6;
inline constexpr int kBoundaryEdgeCount = 12;
inline constexpr int kEdgeCellCount = kInteriorEdgeCount + kBoundaryEdgeCount;

constexpr int corner_id(int v, int w) { return 4 * v + w; }
constexpr bool is_interior_cell(int cell) { return cell < kInteriorEdgeCount; }

// 1-cell id of B(v, f).
int boundary_cell(int v, int f);

struct BoundaryEdge {
    int v = 0;
    int f = 0;
};
BoundaryEdge boundary_edge_of(int cell);

// Global start and end corner of a 1-cell.
std::array<int, 2> cell_corners(int cell);

struct PolygonSide {
    int cell = 0;
    bool forward = true;  // traversal agrees with the global direction
};

enum class FaceKind { Hexagon, Triangle };

struct PolygonCell {
    FaceKind kind = FaceKind::Hexagon;
    int label = 0;                    // f for hexagons, v for triangles
    std::vector<PolygonSide> sides;   // traversal order
    std::vector<int> corners;         // corners[i] starts sides[i]
};

struct TruncatedTetrahedron {
    std::array<PolygonCell, 4> hexagons;   // indexed by f
    std::array<PolygonCell, 4> triangles;  // indexed by v

    static const TruncatedTetrahedron& standard();

    // The polygon cells containing a 1-cell: two hexagons for an interior edge,
    // a hexagon and a triangle for a boundary edge.
    std::vector<const PolygonCell*> cells_on(int cell) const;
    // Side index of `cell` in `poly`, or -1.
    static int side_index(const PolygonCell& poly, int cell);
    static bool adjacent_sides(const PolygonCell& poly, int i, int j);
};

}  // namespace tb
