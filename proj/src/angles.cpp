#include "tb/angles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "tb/simplex.hpp"

namespace tb {

Rational LinearEquation::evaluate(const std::vector<Rational>& x) const {
    Rational s;
    for (const auto& [v, c] : terms) s += c * x[static_cast<std::size_t>(v)];
    return s;
}

int ConstraintSystem::count(EquationKind k) const {
    return static_cast<int>(std::count_if(equalities.begin(), equalities.end(), [&](const LinearEquation& e) { return e.kind == k; }));
}

namespace {

void add_vertex_equalities(ConstraintSystem& c, int tet) {
    for (int v = 0; v < 4; ++v) {
        LinearEquation eq;
        for (int e = 0; e < 6; ++e)
            if (kEdgeVertices[e][0] == v || kEdgeVertices[e][1] == v) eq.terms.emplace_back(6 * tet + e, Rational(1));
        eq.rhs = Rational(1);
        eq.kind = EquationKind::Vertex;
        eq.label = "vertex " + std::to_string(v) + " of tet " + std::to_string(tet);
        c.equalities.push_back(std::move(eq));
    }
}

const char* kQuadRemark =
    "non-vertex-linking curves in a tetrahedron cross four edges; with opposite angles a, b, c and a + b + c = 1 their "
    "exterior sum is 2 + 2c > 2, so the vertex equalities and positivity imply the strict curve condition";

}  // namespace

ConstraintSystem build_constraints(const Triangulation& t) {
    ConstraintSystem c;
    c.num_vars = 6 * t.size();
    const auto classes = compute_edge_classes(t);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        LinearEquation eq;
        std::map<int, Rational> coef;
        for (const Corner& k : classes[i].corners) coef[6 * k.tet + k.edge] += Rational(1);
        eq.terms.assign(coef.begin(), coef.end());
        eq.rhs = Rational(2);
        eq.kind = EquationKind::Edge;
        eq.label = "edge class " + std::to_string(i);
        c.equalities.push_back(std::move(eq));
    }
    for (int tet = 0; tet < t.size(); ++tet) add_vertex_equalities(c, tet);
    c.remarks.emplace_back(kQuadRemark);
    return c;
}

ConstraintSystem single_tetrahedron_system() {
    ConstraintSystem c;
    c.num_vars = 6;
    add_vertex_equalities(c, 0);
    c.remarks.emplace_back(kQuadRemark);
    return c;
}

AngleAssignment AngleAssignment::uniform(int tets, Rational value) {
    AngleAssignment a;
    std::array<Rational, 6> row;
    row.fill(value);
    a.theta.assign(static_cast<std::size_t>(tets), row);
    return a;
}

AngleAssignment AngleAssignment::from_flat(const std::vector<Rational>& x) {
    AngleAssignment a;
    a.theta.resize((x.size() + 5) / 6);
    for (std::size_t i = 0; i < x.size(); ++i) a.theta[i / 6][i % 6] = x[i];
    return a;
}

std::vector<Rational> AngleAssignment::flat() const {
    std::vector<Rational> x;
    for (const auto& row : theta) x.insert(x.end(), row.begin(), row.end());
    return x;
}

PolyhedronPattern PolyhedronPattern::tetrahedron() {
    PolyhedronPattern p;
    p.num_vertices = 4;
    for (const auto& e : kEdgeVertices) p.edges.push_back({e[0], e[1]});
    for (int f = 0; f < 4; ++f) {
        std::vector<int> vs;
        for (int v = 0; v < 4; ++v)
            if (v != f) vs.push_back(v);
        p.faces.push_back({edge_index(vs[0], vs[1]), edge_index(vs[1], vs[2]), edge_index(vs[2], vs[0])});
    }
    return p;
}

PolyhedronPattern PolyhedronPattern::prism(int k) {
    PolyhedronPattern p;
    p.num_vertices = 2 * k;
    // Bottom cycle edges 0..k-1, top cycle k..2k-1, verticals 2k..3k-1.
    for (int i = 0; i < k; ++i) p.edges.push_back({i, (i + 1) % k});
    for (int i = 0; i < k; ++i) p.edges.push_back({k + i, k + (i + 1) % k});
    for (int i = 0; i < k; ++i) p.edges.push_back({i, k + i});
    std::vector<int> bottom, top;
    for (int i = 0; i < k; ++i) {
        bottom.push_back(i);
        top.push_back(k + i);
        p.faces.push_back({i, 2 * k + (i + 1) % k, k + i, 2 * k + i});
    }
    p.faces.push_back(bottom);
    p.faces.push_back(top);
    return p;
}

namespace {

// All non-crossing perfect matchings of points in cyclic order.
void noncrossing_matchings(const std::vector<int>& pts, std::size_t lo, std::size_t hi, std::vector<std::pair<int, int>>& cur,
                           const std::function<void()>& emit) {
    if (lo >= hi) {
        emit();
        return;
    }
    for (std::size_t k = lo + 1; k < hi; k += 2) {
        cur.emplace_back(pts[lo], pts[k]);
        // Inside (lo, k) and outside (k, hi) are matched independently.
        std::vector<std::pair<int, int>> saved = cur;
        noncrossing_matchings(pts, lo + 1, k, cur, [&] { noncrossing_matchings(pts, k + 1, hi, cur, emit); });
        cur = saved;
        cur.pop_back();
    }
}

}  // namespace

std::vector<NormalCurveClass> enumerate_normal_curves(const PolyhedronPattern& p) {
    const int m = static_cast<int>(p.edges.size());
    if (m > kMaxPatternEdges) throw TooLarge("pattern has " + std::to_string(m) + " edges; the limit is " + std::to_string(kMaxPatternEdges));
    std::vector<NormalCurveClass> out;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        auto crossed = [&](int e) { return (mask >> e) & 1u; };
        std::vector<std::vector<int>> per_face;
        bool even = true;
        for (const auto& f : p.faces) {
            std::vector<int> pts;
            for (int e : f)
                if (crossed(e)) pts.push_back(e);
            even = even && pts.size() % 2 == 0;
            per_face.push_back(std::move(pts));
        }
        if (!even) continue;
        // Choose a matching in every face, then keep single closed curves.
        std::vector<std::vector<std::pair<int, int>>> chosen(p.faces.size());
        std::function<void(std::size_t)> rec = [&](std::size_t fi) {
            if (fi == p.faces.size()) {
                std::vector<int> parent(static_cast<std::size_t>(m));
                std::iota(parent.begin(), parent.end(), 0);
                std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
                NormalCurveClass c;
                for (std::size_t f = 0; f < chosen.size(); ++f)
                    for (auto [a, b] : chosen[f]) {
                        parent[find(a)] = find(b);
                        c.arcs.push_back({static_cast<int>(f), std::min(a, b), std::max(a, b)});
                    }
                int root = -1;
                for (int e = 0; e < m; ++e) {
                    if (!crossed(e)) continue;
                    c.edges.push_back(e);
                    if (root < 0) root = find(e);
                    if (find(e) != root) return;
                }
                // Two-colour the vertices: crossed edges switch sides.
                std::vector<int> side(static_cast<std::size_t>(p.num_vertices), -1);
                side[0] = 0;
                for (bool changed = true; changed;) {
                    changed = false;
                    for (int e = 0; e < m; ++e) {
                        auto [u, v] = p.edges[static_cast<std::size_t>(e)];
                        const int flip = crossed(e) ? 1 : 0;
                        if (side[u] >= 0 && side[v] < 0) side[v] = side[u] ^ flip, changed = true;
                        if (side[v] >= 0 && side[u] < 0) side[u] = side[v] ^ flip, changed = true;
                    }
                }
                const auto ones = std::count(side.begin(), side.end(), 1);
                c.vertex_linking = ones == 1 || ones == p.num_vertices - 1;
                out.push_back(std::move(c));
                return;
            }
            std::vector<std::pair<int, int>> cur;
            noncrossing_matchings(per_face[fi], 0, per_face[fi].size(), cur, [&] {
                chosen[fi] = cur;
                rec(fi + 1);
            });
        };
        rec(0);
    }
    return out;
}

MaxMinResult solve_max_min(const ConstraintSystem& c) {
    // Substitute x = eps + y with y >= 0; eps is the last column.
    const int n = c.num_vars;
    LinearProgram lp;
    lp.num_vars = n + 1;
    lp.objective.assign(static_cast<std::size_t>(n + 1), Rational{});
    lp.objective[static_cast<std::size_t>(n)] = Rational(1);
    std::vector<bool> bounded(static_cast<std::size_t>(n), false);
    for (const auto& eq : c.equalities) {
        std::vector<Rational> row(static_cast<std::size_t>(n + 1));
        Rational total;
        bool nonneg = true;
        for (const auto& [v, coef] : eq.terms) {
            row[static_cast<std::size_t>(v)] += coef;
            row[static_cast<std::size_t>(n)] += coef;
            total += coef;
            nonneg = nonneg && coef.sign() >= 0;
        }
        lp.add_eq(std::move(row), eq.rhs);
        // a_j x_j <= b - (S - a_j) eps here, which gives x_j <= 1 - eps
        // whenever b <= a_j and S >= 2 a_j; those upper-bound rows are dropped.
        if (!nonneg) continue;
        for (const auto& [v, coef] : eq.terms)
            if (eq.rhs <= coef && total >= Rational(2) * coef) bounded[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 0; v < n; ++v) {
        if (bounded[static_cast<std::size_t>(v)]) continue;
        std::vector<Rational> row(static_cast<std::size_t>(n + 1));
        row[static_cast<std::size_t>(v)] = Rational(1);
        row[static_cast<std::size_t>(n)] = Rational(2);
        lp.add_le(std::move(row), Rational(1));
    }
    const LpResult res = solve_lp(lp);
    MaxMinResult out;
    if (res.status != LpStatus::Optimal || res.value.sign() <= 0) return out;
    out.status = SolveStatus::Feasible;
    out.slack = res.value;
    std::vector<Rational> x(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) x[static_cast<std::size_t>(v)] = res.x[static_cast<std::size_t>(v)] + res.value;
    out.assignment = AngleAssignment::from_flat(x);
    return out;
}

AssignmentReport check_assignment(const Triangulation& t, const AngleAssignment& a) {
    AssignmentReport r;
    if (a.size() != t.size()) {
        r.violations.push_back("assignment has " + std::to_string(a.size()) + " tetrahedra, triangulation has " + std::to_string(t.size()));
        return r;
    }
    for (int tet = 0; tet < t.size(); ++tet)
        for (int e = 0; e < 6; ++e) {
            const Rational& th = a.theta[static_cast<std::size_t>(tet)][static_cast<std::size_t>(e)];
            if (th.sign() <= 0 || th >= Rational(1))
                r.violations.push_back("range: tet " + std::to_string(tet) + " edge " + std::to_string(e) + " has angle " + th.str());
        }
    const auto classes = compute_edge_classes(t);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        Rational s;
        for (const Corner& k : classes[i].corners) s += a.theta[static_cast<std::size_t>(k.tet)][static_cast<std::size_t>(k.edge)];
        if (s != Rational(2)) r.violations.push_back("edge class " + std::to_string(i) + ": angle sum " + s.str() + " != 2");
    }
    static const auto curves = enumerate_normal_curves(PolyhedronPattern::tetrahedron());
    for (int tet = 0; tet < t.size(); ++tet)
        for (std::size_t ci = 0; ci < curves.size(); ++ci) {
            Rational ext;
            for (int e : curves[ci].edges) ext += a.exterior(tet, e);
            std::string where = "curve " + std::to_string(ci) + " in tet " + std::to_string(tet) + ": exterior sum " + ext.str();
            if (curves[ci].vertex_linking && ext != Rational(2)) r.violations.push_back(where + " != 2");
            if (!curves[ci].vertex_linking && ext <= Rational(2)) r.violations.push_back(where + " <= 2");
        }
    return r;
}

}  // namespace tb
