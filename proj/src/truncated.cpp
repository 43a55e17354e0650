#include "tb/truncated.hpp"

#include <stdexcept>

#include "tb/triangulation.hpp"

namespace tb {

namespace {

// The two vertices other than v and f, increasing.
std::array<int, 2> others(int v, int f) {
    std::array<int, 2> out{};
    int k = 0;
    for (int i = 0; i < 4; ++i)
        if (i != v && i != f) out[static_cast<std::size_t>(k++)] = i;
    return out;
}

PolygonSide side_between(int from_corner, int to_corner, int cell) {
    auto ends = cell_corners(cell);
    if (ends[0] == from_corner && ends[1] == to_corner) return {cell, true};
    if (ends[1] == from_corner && ends[0] == to_corner) return {cell, false};
    throw std::logic_error("side_between: corners do not bound the cell");
}

PolygonCell make_hexagon(int f) {
    std::array<int, 3> vs{};
    int k = 0;
    for (int i = 0; i < 4; ++i)
        if (i != f) vs[static_cast<std::size_t>(k++)] = i;
    PolygonCell p;
    p.kind = FaceKind::Hexagon;
    p.label = f;
    for (int i = 0; i < 3; ++i) {
        const int a = vs[static_cast<std::size_t>(i)];
        const int b = vs[static_cast<std::size_t>((i + 1) % 3)];
        const int c = vs[static_cast<std::size_t>((i + 2) % 3)];
        p.corners.push_back(corner_id(a, b));
        p.sides.push_back(side_between(corner_id(a, b), corner_id(b, a), edge_index(a, b)));
        p.corners.push_back(corner_id(b, a));
        p.sides.push_back(side_between(corner_id(b, a), corner_id(b, c), boundary_cell(b, f)));
    }
    return p;
}

PolygonCell make_triangle(int v) {
    std::array<int, 3> vs{};
    int k = 0;
    for (int i = 0; i < 4; ++i)
        if (i != v) vs[static_cast<std::size_t>(k++)] = i;
    PolygonCell p;
    p.kind = FaceKind::Triangle;
    p.label = v;
    for (int i = 0; i < 3; ++i) {
        const int a = vs[static_cast<std::size_t>(i)];
        const int b = vs[static_cast<std::size_t>((i + 1) % 3)];
        const int c = vs[static_cast<std::size_t>((i + 2) % 3)];
        // The side from (v,a) to (v,b) lies in the hexagon opposite c.
        p.corners.push_back(corner_id(v, a));
        p.sides.push_back(side_between(corner_id(v, a), corner_id(v, b), boundary_cell(v, c)));
    }
    return p;
}

}  // namespace

int boundary_cell(int v, int f) {
    if (v == f || v < 0 || v > 3 || f < 0 || f > 3) throw std::invalid_argument("boundary_cell: need distinct v, f in 0..3");
    // f indexes among the three vertices other than v.
    return kInteriorEdgeCount + 3 * v + (f < v ? f : f - 1);
}

BoundaryEdge boundary_edge_of(int cell) {
    if (cell < kInteriorEdgeCount || cell >= kEdgeCellCount) throw std::invalid_argument("boundary_edge_of: not a boundary edge");
    const int k = cell - kInteriorEdgeCount;
    const int v = k / 3;
    const int j = k % 3;
    return {v, j < v ? j : j + 1};
}

std::array<int, 2> cell_corners(int cell) {
    if (is_interior_cell(cell)) {
        const int a = kEdgeVertices[static_cast<std::size_t>(cell)][0];
        const int b = kEdgeVertices[static_cast<std::size_t>(cell)][1];
        return {corner_id(a, b), corner_id(b, a)};
    }
    const auto [v, f] = boundary_edge_of(cell);
    const auto xy = others(v, f);
    return {corner_id(v, xy[0]), corner_id(v, xy[1])};
}

const TruncatedTetrahedron& TruncatedTetrahedron::standard() {
    static const TruncatedTetrahedron t = [] {
        TruncatedTetrahedron out;
        for (int i = 0; i < 4; ++i) {
            out.hexagons[static_cast<std::size_t>(i)] = make_hexagon(i);
            out.triangles[static_cast<std::size_t>(i)] = make_triangle(i);
        }
        return out;
    }();
    return t;
}

std::vector<const PolygonCell*> TruncatedTetrahedron::cells_on(int cell) const {
    std::vector<const PolygonCell*> out;
    for (const auto& h : hexagons)
        if (side_index(h, cell) >= 0) out.push_back(&h);
    for (const auto& t : triangles)
        if (side_index(t, cell) >= 0) out.push_back(&t);
    return out;
}

int TruncatedTetrahedron::side_index(const PolygonCell& poly, int cell) {
    for (std::size_t i = 0; i < poly.sides.size(); ++i)
        if (poly.sides[i].cell == cell) return static_cast<int>(i);
    return -1;
}

bool TruncatedTetrahedron::adjacent_sides(const PolygonCell& poly, int i, int j) {
    const int n = static_cast<int>(poly.sides.size());
    const int d = ((i - j) % n + n) % n;
    return d == 1 || d == n - 1;
}

}  // namespace tb
