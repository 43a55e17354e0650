#include "tb/discs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tb/simplex.hpp"
#include "tb/triangulation.hpp"

namespace tb {

std::string to_string(DiscTag tag) {
    switch (tag) {
        case DiscTag::VertexLink: return "vertex_link";
        case DiscTag::Bigon: return "bigon";
        case DiscTag::WeakBigon: return "weak_bigon";
        case DiscTag::Arclike: return "arclike";
        case DiscTag::ModifiedVertexLink: return "modified_vertex_link";
        case DiscTag::FusedVertexLink: return "fused_vertex_link";
        case DiscTag::Generic: return "generic";
    }
    return "generic";
}

namespace {

Chord make_chord(CurvePoint p, CurvePoint q) {
    if (q < p) std::swap(p, q);
    return {p, q};
}

// Polygons 0..3 are hexagons, 4..7 triangles.
const PolygonCell& polygon(int idx) {
    const auto& t = TruncatedTetrahedron::standard();
    return idx < 4 ? t.hexagons[static_cast<std::size_t>(idx)] : t.triangles[static_cast<std::size_t>(idx - 4)];
}

const std::vector<Chord>& arcs_in(const DiscType& d, int idx) {
    return idx < 4 ? d.hexagon_arcs[static_cast<std::size_t>(idx)] : d.triangle_arcs[static_cast<std::size_t>(idx - 4)];
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

struct Atom {
    bool is_corner = false;
    int corner = -1;
    CurvePoint point;
    int side = 0;
    int ordinal = 0;  // 0 for the corner opening a side, t + 1 for its t-th point
};

std::vector<Atom> atoms_of(const DiscType& d, const PolygonCell& p) {
    std::vector<Atom> out;
    for (std::size_t i = 0; i < p.sides.size(); ++i) {
        out.push_back({true, p.corners[i], {}, static_cast<int>(i), 0});
        const int cell = p.sides[i].cell;
        const int k = d.points_on(cell);
        for (int t = 0; t < k; ++t) {
            const int pos = p.sides[i].forward ? t : k - 1 - t;
            out.push_back({false, -1, {cell, pos}, static_cast<int>(i), t + 1});
        }
    }
    return out;
}

enum class ElemKind { Segment, Corner, Chord };

struct Element {
    ElemKind kind = ElemKind::Segment;
    int cell = 0;   // segments
    int index = 0;  // segment index along the cell, corner id, or chord id
    bool forward = true;
};

struct Piece {
    int polygon = 0;
    std::vector<Element> boundary;  // cyclic
};

// Full combinatorial analysis of a curve: pieces of every polygon cut by its
// arcs, and which side of the curve each piece lies on.
struct Analysis {
    std::vector<std::string> defects;
    std::vector<Chord> chords;
    std::vector<int> chord_polygon;
    std::vector<Piece> pieces;
    std::vector<int> side;  // per piece
    int sides = 0;
    int curve_components = 0;
    std::map<std::pair<int, int>, std::vector<int>> pieces_on_segment;
};

bool separates(int i, int j, int k) {
    // Whether k lies strictly inside the cyclic interval (i, j) with i < j.
    return i < k && k < j;
}

Analysis analyse(const DiscType& d) {
    Analysis an;
    std::map<CurvePoint, int> point_id;
    for (int cell = 0; cell < kEdgeCellCount; ++cell)
        for (int pos = 0; pos < d.points_on(cell); ++pos) point_id.emplace(CurvePoint{cell, pos}, static_cast<int>(point_id.size()));

    std::vector<std::vector<Atom>> atoms(8);
    std::vector<std::vector<int>> partner(8), chord_at(8);
    for (int pi = 0; pi < 8; ++pi) {
        const PolygonCell& p = polygon(pi);
        atoms[static_cast<std::size_t>(pi)] = atoms_of(d, p);
        const auto& at = atoms[static_cast<std::size_t>(pi)];
        std::map<CurvePoint, int> local;
        for (std::size_t i = 0; i < at.size(); ++i)
            if (!at[i].is_corner) local[at[i].point] = static_cast<int>(i);
        auto& part = partner[static_cast<std::size_t>(pi)];
        auto& cat = chord_at[static_cast<std::size_t>(pi)];
        part.assign(at.size(), -1);
        cat.assign(at.size(), -1);
        const std::string where = (pi < 4 ? "hexagon " : "triangle ") + std::to_string(pi % 4);
        for (const Chord& c : arcs_in(d, pi)) {
            auto ia = local.find(c.a), ib = local.find(c.b);
            if (ia == local.end() || ib == local.end() || c.a == c.b) {
                an.defects.push_back(where + ": arc endpoint is not a point on a side");
                continue;
            }
            if (part[static_cast<std::size_t>(ia->second)] >= 0 || part[static_cast<std::size_t>(ib->second)] >= 0) {
                an.defects.push_back(where + ": point used by two arcs");
                continue;
            }
            const int id = static_cast<int>(an.chords.size());
            an.chords.push_back(c);
            an.chord_polygon.push_back(pi);
            part[static_cast<std::size_t>(ia->second)] = ib->second;
            part[static_cast<std::size_t>(ib->second)] = ia->second;
            cat[static_cast<std::size_t>(ia->second)] = id;
            cat[static_cast<std::size_t>(ib->second)] = id;
        }
        for (std::size_t i = 0; i < at.size(); ++i)
            if (!at[i].is_corner && part[i] < 0) an.defects.push_back(where + ": point without an arc");
        for (std::size_t i = 0; i < at.size(); ++i)
            for (std::size_t k = 0; k < at.size(); ++k) {
                const int j = part[i], l = part[k];
                if (j < 0 || l < 0 || static_cast<int>(i) > j || static_cast<int>(k) > l || i >= k) continue;
                if (separates(static_cast<int>(i), j, static_cast<int>(k)) != separates(static_cast<int>(i), j, l))
                    an.defects.push_back(where + ": arcs cross");
            }
    }
    if (!an.defects.empty()) return an;
    if (an.chords.empty()) {
        an.defects.emplace_back("empty curve");
        return an;
    }

    UnionFind curve(point_id.size());
    for (const Chord& c : an.chords) curve.unite(point_id.at(c.a), point_id.at(c.b));
    std::set<int> roots;
    for (std::size_t i = 0; i < point_id.size(); ++i) roots.insert(curve.find(static_cast<int>(i)));
    an.curve_components = static_cast<int>(roots.size());

    for (int pi = 0; pi < 8; ++pi) {
        const PolygonCell& p = polygon(pi);
        const auto& at = atoms[static_cast<std::size_t>(pi)];
        const auto& part = partner[static_cast<std::size_t>(pi)];
        const std::size_t n = at.size();
        std::vector<bool> used(n, false);
        for (std::size_t start = 0; start < n; ++start) {
            if (used[start]) continue;
            Piece piece;
            piece.polygon = pi;
            std::size_t s = start;
            do {
                used[s] = true;
                const PolygonSide& side = p.sides[static_cast<std::size_t>(at[s].side)];
                const int k = d.points_on(side.cell);
                const int t = at[s].ordinal;
                Element seg{ElemKind::Segment, side.cell, side.forward ? t : k - t, side.forward};
                piece.boundary.push_back(seg);
                const std::size_t next = (s + 1) % n;
                if (at[next].is_corner) {
                    piece.boundary.push_back({ElemKind::Corner, 0, at[next].corner, true});
                    s = next;
                } else {
                    piece.boundary.push_back({ElemKind::Chord, 0, chord_at[static_cast<std::size_t>(pi)][next], true});
                    s = static_cast<std::size_t>(part[next]);
                }
            } while (s != start);
            const int id = static_cast<int>(an.pieces.size());
            for (const Element& e : piece.boundary)
                if (e.kind == ElemKind::Segment) an.pieces_on_segment[{e.cell, e.index}].push_back(id);
            an.pieces.push_back(std::move(piece));
        }
    }
    UnionFind region(an.pieces.size());
    for (const auto& [seg, ps] : an.pieces_on_segment) {
        if (ps.size() != 2) throw std::logic_error("segment not shared by exactly two pieces");
        region.unite(ps[0], ps[1]);
    }
    std::map<int, int> side_of_root;
    for (std::size_t i = 0; i < an.pieces.size(); ++i) {
        const int r = region.find(static_cast<int>(i));
        auto [it, fresh] = side_of_root.emplace(r, static_cast<int>(side_of_root.size()));
        an.side.push_back(it->second);
    }
    an.sides = static_cast<int>(side_of_root.size());
    if (an.curve_components != 1) an.defects.push_back("curve has " + std::to_string(an.curve_components) + " components");
    else if (an.sides != 2) throw std::logic_error("a single closed curve must have two sides");
    return an;
}

CurveSides summarise(const Analysis& an) {
    CurveSides out;
    out.simple_closed = an.defects.empty();
    if (!out.simple_closed) return out;
    std::array<std::set<int>, 2> corners;
    std::array<std::set<std::pair<int, int>>, 2> segs;
    for (std::size_t i = 0; i < an.pieces.size(); ++i) {
        const int s = an.side[i];
        auto& sum = out.sides[static_cast<std::size_t>(s)];
        (an.pieces[i].polygon < 4 ? sum.hexagon_pieces : sum.triangle_pieces)++;
        for (const Element& e : an.pieces[i].boundary) {
            if (e.kind == ElemKind::Corner) corners[static_cast<std::size_t>(s)].insert(e.index);
            if (e.kind == ElemKind::Segment && is_interior_cell(e.cell)) segs[static_cast<std::size_t>(s)].insert({e.cell, e.index});
        }
    }
    for (std::size_t s = 0; s < 2; ++s) {
        out.sides[s].corners.assign(corners[s].begin(), corners[s].end());
        out.sides[s].interior_segments.assign(segs[s].begin(), segs[s].end());
    }
    return out;
}

bool piece_touches(const Piece& p) {
    for (const Element& e : p.boundary)
        if (e.kind == ElemKind::Corner || (e.kind == ElemKind::Segment && is_interior_cell(e.cell))) return true;
    return false;
}

// Whether the part of a side made of `elements` (taken from cut pieces) plus
// everything reachable through their segments, avoiding the cut pieces,
// meets an interior edge.
bool region_touches(const Analysis& an, const std::vector<Element>& elements, const std::set<int>& cut) {
    std::set<int> seen(cut.begin(), cut.end());
    std::vector<int> todo;
    auto enter = [&](const Element& e) {
        for (int q : an.pieces_on_segment.at({e.cell, e.index}))
            if (seen.insert(q).second) todo.push_back(q);
    };
    for (const Element& e : elements) {
        if (e.kind == ElemKind::Corner) return true;
        if (e.kind == ElemKind::Segment) {
            if (is_interior_cell(e.cell)) return true;
            enter(e);
        }
    }
    while (!todo.empty()) {
        const Piece& p = an.pieces[static_cast<std::size_t>(todo.back())];
        todo.pop_back();
        if (piece_touches(p)) return true;
        for (const Element& e : p.boundary)
            if (e.kind == ElemKind::Segment) enter(e);
    }
    return false;
}

// Elements strictly after index i and strictly before j, cyclically.
std::vector<Element> between(const std::vector<Element>& b, std::size_t i, std::size_t j) {
    std::vector<Element> out;
    for (std::size_t k = (i + 1) % b.size(); k != j; k = (k + 1) % b.size()) out.push_back(b[k]);
    return out;
}

std::vector<Element> joined(std::vector<Element> a, const std::vector<Element>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Token at which a traversal enters segment `e`; tokens of a cell are numbered
// -1 (start corner), 0..k-1 (points), k (end corner), and segment j runs from
// token j - 1 to token j.
int entry_token(const Element& e) {
    return e.forward ? e.index - 1 : e.index;
}

// Sides of the curve on which a face compression arc exists.
std::set<int> compression_sides(const Analysis& an) {
    std::set<int> found;
    for (std::size_t qi = 0; qi < an.pieces.size(); ++qi) {
        const Piece& q = an.pieces[qi];
        if (q.polygon >= 4) continue;
        const auto& b = q.boundary;
        const int side = an.side[qi];
        // An arc across the hexagon piece between two different arcs of the curve.
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i].kind != ElemKind::Chord) continue;
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                if (b[j].kind != ElemKind::Chord) continue;
                const std::set<int> cut{static_cast<int>(qi)};
                if (region_touches(an, between(b, i, j), cut) && region_touches(an, between(b, j, i), cut)) found.insert(side);
            }
        }
        // An arc from a curve arc in the hexagon, through a boundary edge, to
        // the curve arc in the adjacent triangle piece.
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i].kind != ElemKind::Chord) continue;
            for (std::size_t s = 0; s < b.size(); ++s) {
                if (b[s].kind != ElemKind::Segment || is_interior_cell(b[s].cell)) continue;
                int ti = -1;
                for (int other : an.pieces_on_segment.at({b[s].cell, b[s].index}))
                    if (other != static_cast<int>(qi)) ti = other;
                const Piece& tp = an.pieces[static_cast<std::size_t>(ti)];
                const auto& tb_ = tp.boundary;
                std::size_t s2 = 0;
                while (!(tb_[s2].kind == ElemKind::Segment && tb_[s2].cell == b[s].cell && tb_[s2].index == b[s].index)) ++s2;
                for (std::size_t j = 0; j < tb_.size(); ++j) {
                    if (tb_[j].kind != ElemKind::Chord) continue;
                    const auto q_a = between(b, i, s);   // meets the segment at its entry token in q
                    const auto q_b = between(b, s, i);
                    const auto t_after = between(tb_, s2, j);   // meets it at the exit token in the triangle
                    const auto t_before = between(tb_, j, s2);  // meets it at the entry token in the triangle
                    const bool same = entry_token(b[s]) == entry_token(tb_[s2]);
                    const auto r1 = joined(q_a, same ? t_before : t_after);
                    const auto r2 = joined(q_b, same ? t_after : t_before);
                    const std::set<int> cut{static_cast<int>(qi), ti};
                    if (region_touches(an, r1, cut) && region_touches(an, r2, cut)) found.insert(side);
                }
            }
        }
    }
    return found;
}

std::vector<int> vertex_corners(int v) {
    std::vector<int> out;
    for (int w = 0; w < 4; ++w)
        if (w != v) out.push_back(corner_id(v, w));
    return out;
}

bool is_returning(const Chord& c) {
    return c.a.cell == c.b.cell;
}

// The corner-free side of an arclike curve, or -1.
int arc_side(const DiscType& d, const CurveSides& cs) {
    if (!cs.simple_closed) return -1;
    for (int s = 0; s < 2; ++s) {
        const auto& side = cs.sides[static_cast<std::size_t>(s)];
        if (!side.corners.empty() || side.interior_segments.empty()) continue;
        if (side.triangle_pieces != 2) continue;
        // Each interior edge met at most once by the associated arc.
        std::set<int> edges;
        bool once = true;
        for (auto [e, idx] : side.interior_segments) once = once && edges.insert(e).second;
        int returning = 0;
        for (const auto& arcs : d.triangle_arcs)
            for (const Chord& c : arcs) returning += is_returning(c) ? 1 : 0;
        if (once && returning == 2) return s;
    }
    return -1;
}

DiscTag classify_with(const DiscType& d, const CurveSides& cs) {
    const int k = d.boundary_arcs();
    const auto& c = d.crossings;
    auto crossing_pattern = [&](const std::vector<int>& at_vertices) {
        std::array<int, 6> want{};
        for (int v : at_vertices)
            for (int e = 0; e < 6; ++e)
                if (kEdgeVertices[static_cast<std::size_t>(e)][0] == v || kEdgeVertices[static_cast<std::size_t>(e)][1] == v) ++want[static_cast<std::size_t>(e)];
        return want == c;
    };
    auto some_side_has_corners = [&](std::vector<int> corners) {
        std::sort(corners.begin(), corners.end());
        return cs.simple_closed && (cs.sides[0].corners == corners || cs.sides[1].corners == corners);
    };
    for (int v = 0; v < 4; ++v)
        if (k == 0 && crossing_pattern({v})) return DiscTag::VertexLink;
    const bool no_crossings = std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
    if (no_crossings && k == 2 && cs.simple_closed) {
        for (int e = 0; e < 6; ++e) {
            const int a = kEdgeVertices[static_cast<std::size_t>(e)][0], b = kEdgeVertices[static_cast<std::size_t>(e)][1];
            std::vector<int> ends{corner_id(a, b), corner_id(b, a)};
            std::sort(ends.begin(), ends.end());
            for (const auto& side : cs.sides)
                if (side.corners == ends && side.interior_segments == std::vector<std::pair<int, int>>{{e, 0}}) return DiscTag::Bigon;
        }
        for (const auto& side : cs.sides)
            if (!side.touches_interior_edges() && side.hexagon_pieces == 1 && side.triangle_pieces == 2) return DiscTag::WeakBigon;
    }
    if (arc_side(d, cs) >= 0) return DiscTag::Arclike;
    for (int v = 0; v < 4; ++v) {
        if (!crossing_pattern({v}) || k < 1 || k > 2) continue;
        bool fingers = d.triangle_arcs[static_cast<std::size_t>(v)].empty();
        for (const auto& arcs : d.triangle_arcs)
            for (const Chord& ch : arcs) fingers = fingers && is_returning(ch);
        if (fingers && some_side_has_corners(vertex_corners(v))) return DiscTag::ModifiedVertexLink;
    }
    for (int v = 0; v < 4; ++v)
        for (int w = v + 1; w < 4; ++w) {
            if (k != 0 || !crossing_pattern({v, w})) continue;
            auto both = vertex_corners(v);
            for (int x : vertex_corners(w)) both.push_back(x);
            if (some_side_has_corners(both)) return DiscTag::FusedVertexLink;
        }
    return DiscTag::Generic;
}

}  // namespace

DiscType DiscType::from_arcs(std::array<std::vector<Chord>, 4> hexagon_arcs, std::array<std::vector<Chord>, 4> triangle_arcs) {
    DiscType d;
    for (auto& arcs : hexagon_arcs) {
        for (auto& c : arcs) {
            c = make_chord(c.a, c.b);
            for (const CurvePoint& p : {c.a, c.b})
                if (is_interior_cell(p.cell)) d.crossings[static_cast<std::size_t>(p.cell)] = std::max(d.crossings[static_cast<std::size_t>(p.cell)], p.pos + 1);
        }
        std::sort(arcs.begin(), arcs.end());
    }
    for (auto& arcs : triangle_arcs) {
        for (auto& c : arcs) c = make_chord(c.a, c.b);
        std::sort(arcs.begin(), arcs.end());
    }
    d.hexagon_arcs = std::move(hexagon_arcs);
    d.triangle_arcs = std::move(triangle_arcs);
    return d;
}

int DiscType::boundary_arcs() const {
    int k = 0;
    for (const auto& arcs : triangle_arcs) k += static_cast<int>(arcs.size());
    return k;
}

int DiscType::points_on(int cell) const {
    if (is_interior_cell(cell)) return crossings[static_cast<std::size_t>(cell)];
    int n = 0;
    for (const auto& arcs : triangle_arcs)
        for (const Chord& c : arcs) n += (c.a.cell == cell) + (c.b.cell == cell);
    return n;
}

std::string DiscType::key() const {
    std::ostringstream os;
    auto put = [&](const char* tag, const std::array<std::vector<Chord>, 4>& all) {
        for (std::size_t i = 0; i < 4; ++i) {
            std::vector<Chord> arcs = all[i];
            std::sort(arcs.begin(), arcs.end());
            os << tag << i << ':';
            for (const Chord& c : arcs) os << c.a.cell << '.' << c.a.pos << '-' << c.b.cell << '.' << c.b.pos << ',';
            os << ';';
        }
    };
    put("H", hexagon_arcs);
    put("T", triangle_arcs);
    return os.str();
}

DiscType vertex_link_disc(int v) {
    std::array<std::vector<Chord>, 4> hex;
    for (int f = 0; f < 4; ++f) {
        if (f == v) continue;
        std::vector<int> others;
        for (int x = 0; x < 4; ++x)
            if (x != v && x != f) others.push_back(x);
        hex[static_cast<std::size_t>(f)].push_back(make_chord({edge_index(v, others[0]), 0}, {edge_index(v, others[1]), 0}));
    }
    DiscType d = DiscType::from_arcs(hex, {});
    d.tag = classify(d);
    return d;
}

DiscType bigon_disc(int edge) {
    const int a = kEdgeVertices[static_cast<std::size_t>(edge)][0], b = kEdgeVertices[static_cast<std::size_t>(edge)][1];
    const int c = kEdgeVertices[static_cast<std::size_t>(5 - edge)][0], e = kEdgeVertices[static_cast<std::size_t>(5 - edge)][1];
    std::array<std::vector<Chord>, 4> hex, tri;
    tri[static_cast<std::size_t>(a)].push_back(make_chord({boundary_cell(a, c), 0}, {boundary_cell(a, e), 0}));
    tri[static_cast<std::size_t>(b)].push_back(make_chord({boundary_cell(b, c), 0}, {boundary_cell(b, e), 0}));
    hex[static_cast<std::size_t>(c)].push_back(make_chord({boundary_cell(a, c), 0}, {boundary_cell(b, c), 0}));
    hex[static_cast<std::size_t>(e)].push_back(make_chord({boundary_cell(a, e), 0}, {boundary_cell(b, e), 0}));
    DiscType d = DiscType::from_arcs(hex, tri);
    d.tag = classify(d);
    return d;
}

DiscType quad_disc(int edge) {
    if (edge < 0 || edge > 2) throw std::invalid_argument("quad_disc: edge must be 0, 1 or 2");
    const int a = kEdgeVertices[static_cast<std::size_t>(edge)][0], b = kEdgeVertices[static_cast<std::size_t>(edge)][1];
    const int c = kEdgeVertices[static_cast<std::size_t>(5 - edge)][0], e = kEdgeVertices[static_cast<std::size_t>(5 - edge)][1];
    // In each face the arc cuts off the one vertex on the far side.
    auto arc = [](int lone, int p, int q) { return make_chord({edge_index(lone, p), 0}, {edge_index(lone, q), 0}); };
    std::array<std::vector<Chord>, 4> hex;
    hex[static_cast<std::size_t>(e)].push_back(arc(c, a, b));
    hex[static_cast<std::size_t>(c)].push_back(arc(e, a, b));
    hex[static_cast<std::size_t>(a)].push_back(arc(b, c, e));
    hex[static_cast<std::size_t>(b)].push_back(arc(a, c, e));
    DiscType d = DiscType::from_arcs(hex, {});
    d.tag = classify(d);
    return d;
}

CurveSides curve_sides(const DiscType& d) {
    return summarise(analyse(d));
}

std::vector<std::string> fairly_normal_defects(const DiscType& d) {
    std::vector<std::string> out;
    const auto& tt = TruncatedTetrahedron::standard();
    for (int e = 0; e < kInteriorEdgeCount; ++e)
        if (d.crossings[static_cast<std::size_t>(e)] > 2)
            out.push_back("interior edge " + std::to_string(e) + " crossed " + std::to_string(d.crossings[static_cast<std::size_t>(e)]) + " times");
    for (int v = 0; v < 4; ++v) {
        const auto& arcs = d.triangle_arcs[static_cast<std::size_t>(v)];
        if (arcs.size() > 1) out.push_back("triangle " + std::to_string(v) + " meets the disc in " + std::to_string(arcs.size()) + " arcs");
        for (const Chord& c : arcs)
            if (TruncatedTetrahedron::side_index(tt.triangles[static_cast<std::size_t>(v)], c.a.cell) < 0 ||
                TruncatedTetrahedron::side_index(tt.triangles[static_cast<std::size_t>(v)], c.b.cell) < 0)
                out.push_back("triangle " + std::to_string(v) + " has an arc ending off its sides");
    }
    for (int f = 0; f < 4; ++f) {
        const PolygonCell& h = tt.hexagons[static_cast<std::size_t>(f)];
        for (const Chord& c : d.hexagon_arcs[static_cast<std::size_t>(f)]) {
            const int i = TruncatedTetrahedron::side_index(h, c.a.cell), j = TruncatedTetrahedron::side_index(h, c.b.cell);
            if (i < 0 || j < 0) out.push_back("hexagon " + std::to_string(f) + " has an arc ending off its sides");
            else if (i == j) out.push_back("hexagon " + std::to_string(f) + " has an arc returning to the same edge");
            else if (TruncatedTetrahedron::adjacent_sides(h, i, j)) out.push_back("hexagon " + std::to_string(f) + " has an arc between adjacent edges");
        }
    }
    if (!out.empty()) return out;
    const Analysis an = analyse(d);
    if (!an.defects.empty()) return an.defects;
    const CurveSides cs = summarise(an);
    for (const auto& side : cs.sides)
        if (!side.touches_interior_edges()) out.emplace_back("parallel to a boundary disc missing the interior edges");
    return out;
}

DiscTag classify(const DiscType& d) {
    return classify_with(d, curve_sides(d));
}

std::vector<DiscType> enumerate_fairly_normal_types() {
    const auto& tt = TruncatedTetrahedron::standard();
    // Non-crossing matchings of a hexagon's points, by the number of points on
    // each side, keeping arcs between distinct non-adjacent sides.
    std::map<std::array<int, 6>, std::vector<std::vector<std::pair<int, int>>>> memo;
    auto matchings = [&](const std::array<int, 6>& counts) -> const std::vector<std::vector<std::pair<int, int>>>& {
        auto it = memo.find(counts);
        if (it != memo.end()) return it->second;
        std::vector<int> side_of;
        for (int s = 0; s < 6; ++s)
            for (int t = 0; t < counts[static_cast<std::size_t>(s)]; ++t) side_of.push_back(s);
        using Matching = std::vector<std::pair<int, int>>;
        // Match the first open point with a later one; the stretch in between
        // and the stretch after are then matched independently.
        std::function<std::vector<Matching>(const std::vector<int>&)> rec = [&](const std::vector<int>& open) {
            std::vector<Matching> res;
            if (open.empty()) {
                res.emplace_back();
                return res;
            }
            for (std::size_t k = 1; k < open.size(); k += 2) {
                const int si = side_of[static_cast<std::size_t>(open[0])], sj = side_of[static_cast<std::size_t>(open[k])];
                const int dist = ((si - sj) % 6 + 6) % 6;
                if (dist == 0 || dist == 1 || dist == 5) continue;
                const std::vector<int> inside(open.begin() + 1, open.begin() + static_cast<std::ptrdiff_t>(k));
                const std::vector<int> outside(open.begin() + static_cast<std::ptrdiff_t>(k) + 1, open.end());
                const auto ins = rec(inside);
                if (ins.empty()) continue;
                const auto outs = rec(outside);
                for (const auto& a : ins)
                    for (const auto& b : outs) {
                        Matching m{{open[0], open[k]}};
                        m.insert(m.end(), a.begin(), a.end());
                        m.insert(m.end(), b.begin(), b.end());
                        res.push_back(std::move(m));
                    }
            }
            return res;
        };
        std::vector<int> open(side_of.size());
        std::iota(open.begin(), open.end(), 0);
        auto all = rec(open);
        return memo.emplace(counts, std::move(all)).first->second;
    };

    // Triangle options: none, across sides (0,1), (0,2), (1,2), returning on side 0, 1, 2.
    auto triangle_arc = [&](int v, int option) -> std::vector<Chord> {
        const PolygonCell& t = tt.triangles[static_cast<std::size_t>(v)];
        auto cell = [&](int s) { return t.sides[static_cast<std::size_t>(s)].cell; };
        static const int across[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        if (option == 0) return {};
        if (option <= 3) return {make_chord({cell(across[option - 1][0]), 0}, {cell(across[option - 1][1]), 0})};
        return {make_chord({cell(option - 4), 0}, {cell(option - 4), 1})};
    };

    std::vector<DiscType> out;
    std::array<int, 6> c{};
    std::array<int, 4> opt{};
    for (int cmask = 0; cmask < 729; ++cmask) {
        for (int e = 0, m = cmask; e < 6; ++e, m /= 3) c[static_cast<std::size_t>(5 - e)] = m % 3;
        for (int omask = 0; omask < 2401; ++omask) {
            for (int v = 0, m = omask; v < 4; ++v, m /= 7) opt[static_cast<std::size_t>(3 - v)] = m % 7;
            DiscType base;
            base.crossings = c;
            for (int v = 0; v < 4; ++v) base.triangle_arcs[static_cast<std::size_t>(v)] = triangle_arc(v, opt[static_cast<std::size_t>(v)]);
            if (std::all_of(c.begin(), c.end(), [](int x) { return x == 0; }) && omask == 0) continue;
            std::array<const std::vector<std::vector<std::pair<int, int>>>*, 4> choices{};
            std::array<std::vector<CurvePoint>, 4> points;
            bool even = true;
            for (int f = 0; f < 4 && even; ++f) {
                const PolygonCell& h = tt.hexagons[static_cast<std::size_t>(f)];
                std::array<int, 6> counts{};
                for (int s = 0; s < 6; ++s) {
                    const PolygonSide& side = h.sides[static_cast<std::size_t>(s)];
                    const int k = base.points_on(side.cell);
                    counts[static_cast<std::size_t>(s)] = k;
                    for (int t = 0; t < k; ++t) points[static_cast<std::size_t>(f)].push_back({side.cell, side.forward ? t : k - 1 - t});
                }
                const int total = std::accumulate(counts.begin(), counts.end(), 0);
                even = total % 2 == 0;
                if (even) choices[static_cast<std::size_t>(f)] = &matchings(counts);
                even = even && !choices[static_cast<std::size_t>(f)]->empty();
            }
            if (!even) continue;
            std::array<std::size_t, 4> idx{};
            for (;;) {
                DiscType d = base;
                for (int f = 0; f < 4; ++f) {
                    const auto& m = (*choices[static_cast<std::size_t>(f)])[idx[static_cast<std::size_t>(f)]];
                    for (auto [i, j] : m)
                        d.hexagon_arcs[static_cast<std::size_t>(f)].push_back(
                            make_chord(points[static_cast<std::size_t>(f)][static_cast<std::size_t>(i)], points[static_cast<std::size_t>(f)][static_cast<std::size_t>(j)]));
                    std::sort(d.hexagon_arcs[static_cast<std::size_t>(f)].begin(), d.hexagon_arcs[static_cast<std::size_t>(f)].end());
                }
                const Analysis an = analyse(d);
                if (an.defects.empty()) {
                    const CurveSides cs = summarise(an);
                    if (cs.sides[0].touches_interior_edges() && cs.sides[1].touches_interior_edges()) {
                        d.tag = classify_with(d, cs);
                        out.push_back(std::move(d));
                    }
                }
                int f = 3;
                while (f >= 0 && ++idx[static_cast<std::size_t>(f)] == choices[static_cast<std::size_t>(f)]->size()) idx[static_cast<std::size_t>(f--)] = 0;
                if (f < 0) break;
            }
        }
    }
    return out;
}

DiscType relabel(const DiscType& d, const std::array<int, 4>& s) {
    auto map_point = [&](const CurvePoint& p) -> CurvePoint {
        const int k = d.points_on(p.cell);
        if (is_interior_cell(p.cell)) {
            const int a = kEdgeVertices[static_cast<std::size_t>(p.cell)][0], b = kEdgeVertices[static_cast<std::size_t>(p.cell)][1];
            const int sa = s[static_cast<std::size_t>(a)], sb = s[static_cast<std::size_t>(b)];
            return {edge_index(sa, sb), sa < sb ? p.pos : k - 1 - p.pos};
        }
        const auto [v, f] = boundary_edge_of(p.cell);
        std::vector<int> xy;
        for (int x = 0; x < 4; ++x)
            if (x != v && x != f) xy.push_back(x);
        const bool keep = s[static_cast<std::size_t>(xy[0])] < s[static_cast<std::size_t>(xy[1])];
        return {boundary_cell(s[static_cast<std::size_t>(v)], s[static_cast<std::size_t>(f)]), keep ? p.pos : k - 1 - p.pos};
    };
    std::array<std::vector<Chord>, 4> hex, tri;
    for (int i = 0; i < 4; ++i) {
        for (const Chord& c : d.hexagon_arcs[static_cast<std::size_t>(i)])
            hex[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])].push_back(make_chord(map_point(c.a), map_point(c.b)));
        for (const Chord& c : d.triangle_arcs[static_cast<std::size_t>(i)])
            tri[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])].push_back(make_chord(map_point(c.a), map_point(c.b)));
    }
    DiscType r = DiscType::from_arcs(std::move(hex), std::move(tri));
    r.tag = d.tag;
    return r;
}

int count_orbits(const std::vector<DiscType>& types) {
    std::set<std::string> reps;
    for (const DiscType& d : types) {
        std::string best;
        for (const Perm4& p : Perm4::all()) {
            std::string k = relabel(d, {p[0], p[1], p[2], p[3]}).key();
            if (best.empty() || k < best) best = k;
        }
        reps.insert(best);
    }
    return static_cast<int>(reps.size());
}

Rational AreaFunctional::evaluate(const std::array<Rational, 6>& theta) const {
    Rational a = constant();
    for (std::size_t e = 0; e < 6; ++e) a += Rational(coefficient[e]) * (Rational(1) - theta[e]);
    return a;
}

AreaFunctional area_expr(const DiscType& d) {
    AreaFunctional f;
    f.coefficient = d.crossings;
    f.boundary_arcs = d.boundary_arcs();
    return f;
}

FaceCompression has_face_compression(const DiscType& d) {
    const Analysis an = analyse(d);
    FaceCompression fc;
    if (!an.defects.empty()) return fc;
    const std::set<int> sides = compression_sides(an);
    fc.exists = !sides.empty();
    const int arc = arc_side(d, summarise(an));
    if (arc < 0) {
        fc.on_arc_side = fc.off_arc_side = fc.exists;
        return fc;
    }
    fc.on_arc_side = sides.count(arc) > 0;
    fc.off_arc_side = sides.count(1 - arc) > 0;
    return fc;
}

namespace {

// Optimum of sum_e w_e theta_e over the closed local polytope.
Rational optimise_angles(const std::array<int, 6>& w, const ConstraintSystem& c) {
    LinearProgram lp;
    lp.num_vars = c.num_vars;
    lp.objective.assign(static_cast<std::size_t>(c.num_vars), Rational{});
    for (std::size_t e = 0; e < 6; ++e) lp.objective[e] = Rational(w[e]);
    for (const auto& eq : c.equalities) {
        std::vector<Rational> row(static_cast<std::size_t>(c.num_vars));
        for (const auto& [v, coef] : eq.terms) row[static_cast<std::size_t>(v)] += coef;
        lp.add_eq(std::move(row), eq.rhs);
    }
    for (int v = 0; v < c.num_vars; ++v) {
        std::vector<Rational> row(static_cast<std::size_t>(c.num_vars));
        row[static_cast<std::size_t>(v)] = Rational(1);
        lp.add_le(std::move(row), Rational(1));
    }
    const LpResult r = solve_lp(lp);
    if (r.status != LpStatus::Optimal) throw std::logic_error("local angle polytope is empty");
    return r.value;
}

}  // namespace

Rational min_area_over_polytope(const DiscType& d, const ConstraintSystem& c) {
    const AreaFunctional f = area_expr(d);
    const int total = std::accumulate(f.coefficient.begin(), f.coefficient.end(), 0);
    return Rational(total) + f.constant() - optimise_angles(f.coefficient, c);
}

Rational max_area_over_polytope(const DiscType& d, const ConstraintSystem& c) {
    const AreaFunctional f = area_expr(d);
    std::array<int, 6> neg{};
    for (std::size_t e = 0; e < 6; ++e) neg[e] = -f.coefficient[e];
    const int total = std::accumulate(f.coefficient.begin(), f.coefficient.end(), 0);
    return Rational(total) + f.constant() + optimise_angles(neg, c);
}

}  // namespace tb
