#include "tb/assembly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

namespace tb {

namespace {

// Side of a hexagon arc described by vertex labels: an interior edge (a, b)
// with a < b, or a boundary edge (v, -1).
using SideLabel = std::pair<int, int>;
using ArcLabel = std::pair<SideLabel, SideLabel>;

SideLabel side_label(int cell) {
    if (is_interior_cell(cell)) return {kEdgeVertices[static_cast<std::size_t>(cell)][0], kEdgeVertices[static_cast<std::size_t>(cell)][1]};
    return {boundary_edge_of(cell).v, -1};
}

SideLabel map_side(const SideLabel& s, const Perm4& p) {
    if (s.second < 0) return {p[s.first], -1};
    return {std::min(p[s.first], p[s.second]), std::max(p[s.first], p[s.second])};
}

ArcLabel make_arc(SideLabel a, SideLabel b) {
    if (b < a) std::swap(a, b);
    return {a, b};
}

// Arc labels in face f of tet t, with the piece each came from, in piece order.
std::vector<std::pair<ArcLabel, int>> arcs_in_face(const SurfaceAssembly& s, int tet, int f) {
    std::vector<std::pair<ArcLabel, int>> out;
    for (std::size_t i = 0; i < s.pieces.size(); ++i) {
        if (s.pieces[i].tet != tet) continue;
        for (const Chord& c : s.pieces[i].disc.hexagon_arcs[static_cast<std::size_t>(f)])
            out.emplace_back(make_arc(side_label(c.a.cell), side_label(c.b.cell)), static_cast<int>(i));
    }
    return out;
}

}  // namespace

std::vector<std::string> assembly_defects(const Triangulation& t, const SurfaceAssembly& s) {
    std::vector<std::string> out;
    for (const auto& p : s.pieces)
        if (p.tet < 0 || p.tet >= t.size()) out.push_back("piece in nonexistent tet " + std::to_string(p.tet));
    if (!out.empty()) return out;
    for (int tet = 0; tet < t.size(); ++tet)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = t.gluing(tet, f);
            std::map<ArcLabel, int> here, there;
            for (const auto& [arc, piece] : arcs_in_face(s, tet, f)) ++here[make_arc(map_side(arc.first, g.perm), map_side(arc.second, g.perm))];
            for (const auto& [arc, piece] : arcs_in_face(s, g.tet, g.perm[f])) ++there[arc];
            if (here != there) out.push_back("arcs on face " + std::to_string(f) + " of tet " + std::to_string(tet) + " do not match across the gluing");
        }
    for (const EdgeClass& e : compute_edge_classes(t)) {
        std::vector<int> counts;
        for (const Corner& c : e.corners) {
            int n = 0;
            for (const auto& p : s.pieces)
                if (p.tet == c.tet) n += p.disc.crossings[static_cast<std::size_t>(c.edge)];
            counts.push_back(n);
        }
        if (std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) != counts.end())
            out.push_back("crossings differ around the edge class at tet " + std::to_string(e.corners[0].tet) + " edge " + std::to_string(e.corners[0].edge));
    }
    return out;
}

CellCounts cell_counts(const Triangulation& t, const SurfaceAssembly& s) {
    CellCounts c;
    for (const EdgeClass& e : compute_edge_classes(t))
        for (const auto& p : s.pieces)
            if (p.tet == e.corners[0].tet) c.vertices += p.disc.crossings[static_cast<std::size_t>(e.corners[0].edge)];
    int boundary_points = 0, hexagon_arcs = 0;
    for (const auto& p : s.pieces) {
        for (int cell = kInteriorEdgeCount; cell < kEdgeCellCount; ++cell) boundary_points += p.disc.points_on(cell);
        for (const auto& arcs : p.disc.hexagon_arcs) hexagon_arcs += static_cast<int>(arcs.size());
        c.edges += p.disc.boundary_arcs();
    }
    // Boundary edges and interior faces are each shared by two tetrahedra.
    c.vertices += boundary_points / 2;
    c.edges += hexagon_arcs / 2;
    c.faces = static_cast<int>(s.pieces.size());
    return c;
}

int assembly_components(const Triangulation& t, const SurfaceAssembly& s) {
    std::vector<int> parent(s.pieces.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
    for (int tet = 0; tet < t.size(); ++tet)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = t.gluing(tet, f);
            std::map<ArcLabel, std::vector<int>> here, there;
            for (const auto& [arc, piece] : arcs_in_face(s, tet, f))
                here[make_arc(map_side(arc.first, g.perm), map_side(arc.second, g.perm))].push_back(piece);
            for (const auto& [arc, piece] : arcs_in_face(s, g.tet, g.perm[f])) there[arc].push_back(piece);
            for (const auto& [arc, ps] : here) {
                const auto& qs = there[arc];
                for (std::size_t i = 0; i < std::min(ps.size(), qs.size()); ++i) parent[static_cast<std::size_t>(find(ps[i]))] = find(qs[i]);
            }
        }
    int n = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) n += find(static_cast<int>(i)) == static_cast<int>(i);
    return n;
}

bool is_closed(const SurfaceAssembly& s) {
    return std::all_of(s.pieces.begin(), s.pieces.end(), [](const AssemblyPiece& p) { return p.disc.boundary_arcs() == 0; });
}

SurfaceAssembly assemble_vertex_link_surface(const Triangulation& t) {
    SurfaceAssembly s;
    for (int tet = 0; tet < t.size(); ++tet)
        for (int v = 0; v < 4; ++v) s.pieces.push_back({tet, vertex_link_disc(v)});
    return s;
}

SurfaceAssembly doubled(const SurfaceAssembly& s) {
    SurfaceAssembly out = s;
    out.pieces.insert(out.pieces.end(), s.pieces.begin(), s.pieces.end());
    return out;
}

SurfaceAssembly edge_annulus(const EdgeClass& e) {
    SurfaceAssembly s;
    for (const Corner& c : e.corners) s.pieces.push_back({c.tet, bigon_disc(c.edge)});
    return s;
}

std::vector<SurfaceAssembly> find_normal_assemblies(const Triangulation& t, std::size_t limit) {
    const int n = t.size();
    // Option per tet: quad in {-1, 0, 1, 2} and a 4-bit set of vertex links.
    struct Choice {
        int quad = -1;
        int links = 0;
    };
    // Arcs in face f cutting off vertex w.
    auto arcs_at = [](const Choice& c, int f, int w) {
        int k = (c.links >> w) & 1;
        if (c.quad >= 0) {
            const auto& p = kEdgeVertices[static_cast<std::size_t>(c.quad)];
            const auto& q = kEdgeVertices[static_cast<std::size_t>(5 - c.quad)];
            int partner = -1;
            if (f == p[0]) partner = p[1];
            if (f == p[1]) partner = p[0];
            if (f == q[0]) partner = q[1];
            if (f == q[1]) partner = q[0];
            k += partner == w;
        }
        return k;
    };
    std::vector<Choice> cur(static_cast<std::size_t>(n));
    std::vector<SurfaceAssembly> out;
    std::function<void(int)> rec = [&](int tet) {
        if (out.size() >= limit) return;
        if (tet == n) {
            SurfaceAssembly s;
            for (int k = 0; k < n; ++k) {
                const Choice& c = cur[static_cast<std::size_t>(k)];
                if (c.quad >= 0) s.pieces.push_back({k, quad_disc(c.quad)});
                for (int v = 0; v < 4; ++v)
                    if ((c.links >> v) & 1) s.pieces.push_back({k, vertex_link_disc(v)});
            }
            if (!s.pieces.empty()) out.push_back(std::move(s));
            return;
        }
        for (int quad = -1; quad < 3; ++quad)
            for (int links = 0; links < 16; ++links) {
                cur[static_cast<std::size_t>(tet)] = {quad, links};
                bool ok = true;
                // Check every face whose both sides are decided.
                for (int a = 0; a <= tet && ok; ++a)
                    for (int f = 0; f < 4 && ok; ++f) {
                        const FaceGluing& g = t.gluing(a, f);
                        if (g.tet > tet || (a != tet && g.tet != tet)) continue;
                        for (int w = 0; w < 4 && ok; ++w)
                            if (w != f)
                                ok = arcs_at(cur[static_cast<std::size_t>(a)], f, w) == arcs_at(cur[static_cast<std::size_t>(g.tet)], g.perm[f], g.perm[w]);
                    }
                if (ok) rec(tet + 1);
            }
    };
    rec(0);
    return out;
}

GaussBonnetReport gauss_bonnet_check(const Triangulation& t, const SurfaceAssembly& s, const AngleAssignment& a) {
    const auto defects = assembly_defects(t, s);
    if (!defects.empty()) throw std::invalid_argument("assembly is not matched: " + defects.front());
    GaussBonnetReport r;
    r.counts = cell_counts(t, s);
    for (const auto& p : s.pieces) r.total_area += area_expr(p.disc).evaluate(a.theta[static_cast<std::size_t>(p.tet)]);
    const Rational expected(-2 * r.counts.euler());
    if (r.total_area != expected)
        throw GaussBonnetViolation("total area " + r.total_area.str() + " but -2 chi = " + expected.str());
    return r;
}

}  // namespace tb
