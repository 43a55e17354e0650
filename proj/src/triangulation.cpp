#include "tb/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace tb {

Perm4 Perm4::checked(int a, int b, int c, int d) {
    std::array<int, 4> v{a, b, c, d};
    std::array<int, 4> s = v;
    std::sort(s.begin(), s.end());
    if (s != std::array<int, 4>{0, 1, 2, 3}) throw std::invalid_argument("not a permutation of 0..3");
    return Perm4(a, b, c, d);
}

const std::array<Perm4, 24>& Perm4::all() {
    static const std::array<Perm4, 24> perms = [] {
        std::array<Perm4, 24> out{};
        std::array<int, 4> v{0, 1, 2, 3};
        std::size_t i = 0;
        do {
            out[i++] = Perm4(v[0], v[1], v[2], v[3]);
        } while (std::next_permutation(v.begin(), v.end()));
        return out;
    }();
    return perms;
}

Perm4 Perm4::inverse() const {
    Perm4 r;
    for (int i = 0; i < 4; ++i) r.image_[image_[i]] = static_cast<std::uint8_t>(i);
    return r;
}

int Perm4::sign() const {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (image_[i] > image_[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

bool Perm4::is_double_transposition() const {
    for (int i = 0; i < 4; ++i)
        if (image_[i] == i || image_[image_[i]] != i) return false;
    return true;
}

Perm4 operator*(const Perm4& p, const Perm4& q) {
    return Perm4(p[q[0]], p[q[1]], p[q[2]], p[q[3]]);
}

std::string Perm4::str() const {
    std::string s;
    for (auto x : image_) s.push_back(static_cast<char>('0' + x));
    return s;
}

int edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    for (int e = 0; e < 6; ++e)
        if (kEdgeVertices[e][0] == a && kEdgeVertices[e][1] == b) return e;
    throw std::invalid_argument("edge_index: not a pair of distinct vertices");
}

std::vector<std::string> gluing_defects(const GluingTable& table) {
    std::vector<std::string> out;
    const int n = static_cast<int>(table.size());
    if (n == 0) out.emplace_back("triangulation has no tetrahedra");
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = table[t][f];
            std::string where = "tet " + std::to_string(t) + " face " + std::to_string(f);
            if (g.tet < 0 || g.tet >= n) {
                out.push_back(where + " is not glued to a valid tetrahedron");
                continue;
            }
            const int tf = g.perm[f];
            if (g.tet == t && tf == f) {
                out.push_back(where + " is glued to itself");
                continue;
            }
            const FaceGluing& back = table[g.tet][tf];
            if (back.tet != t || !(back.perm * g.perm).is_identity())
                out.push_back(where + " -> tet " + std::to_string(g.tet) + " face " + std::to_string(tf) + " is not involutive");
            if (g.perm.sign() != -1) out.push_back(where + " has an even gluing permutation " + g.perm.str());
        }
    }
    return out;
}

Triangulation::Triangulation(GluingTable table, std::optional<MonodromyWord> word)
    : table_(std::move(table)), word_(std::move(word)) {
    auto defects = gluing_defects(table_);
    if (!defects.empty()) {
        std::string msg = "invalid gluing table:";
        for (const auto& d : defects) msg += "\n  " + d;
        throw InvalidTriangulation(msg);
    }
}

namespace {

struct Vec2 {
    std::int64_t x = 0, y = 0;
    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(std::int64_t k, Vec2 a) { return {k * a.x, k * a.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

Vec2 apply(const UnimodularMatrix& m, Vec2 v) { return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y}; }

// A layered tetrahedron as four punctures in the universal cover of the fibre.
struct LayeredTet {
    std::array<Vec2, 4> pos;
};

LayeredTet layer(const UnimodularMatrix& basis, Letter x) {
    const Vec2 c1{basis.a, basis.c};
    const Vec2 c2{basis.b, basis.d};
    // The square is the two current triangles; the tetrahedron flips its diagonal.
    std::array<Vec2, 2> top, bottom;
    if (x == Letter::R) {
        top = {Vec2{}, 2 * c1 + c2};
        bottom = {c1, c1 + c2};
    } else {
        top = {Vec2{}, c1 + 2 * c2};
        bottom = {c2, c1 + c2};
    }
    LayeredTet t{{top[0], top[1], bottom[0], bottom[1]}};
    // Orientation of the straight tetrahedron with the new diagonal at height 1 and
    // the old at height 0; relabel the bottom pair to make it positive.
    auto det3 = [&](const LayeredTet& s) {
        const std::int64_t h[4] = {1, 1, 0, 0};
        std::int64_t m[3][3];
        for (int i = 0; i < 3; ++i) {
            m[i][0] = s.pos[i + 1].x - s.pos[0].x;
            m[i][1] = s.pos[i + 1].y - s.pos[0].y;
            m[i][2] = h[i + 1] - h[0];
        }
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    if (det3(t) < 0) std::swap(t.pos[2], t.pos[3]);
    return t;
}

// Vertices of face f (opposite f) in increasing label order.
std::array<int, 3> face_vertices(int f) {
    std::array<int, 3> v{};
    int k = 0;
    for (int i = 0; i < 4; ++i)
        if (i != f) v[static_cast<std::size_t>(k++)] = i;
    return v;
}

// Translation-normalised point set of a face, for matching triangles of the fibre.
std::array<Vec2, 3> normal_form(const std::array<Vec2, 3>& pts) {
    Vec2 lo = *std::min_element(pts.begin(), pts.end());
    std::array<Vec2, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) out[i] = pts[i] - lo;
    std::sort(out.begin(), out.end());
    return out;
}

// Glue face `f` of `a` (with punctures mapped by `to_b`) onto whichever face of
// `b` among `candidates` is the same triangle up to translation.
void glue_faces(GluingTable& table, int ta, const LayeredTet& a, int f, const UnimodularMatrix& to_b, int tb_, const LayeredTet& b,
                std::array<int, 2> candidates) {
    std::array<Vec2, 3> pa{};
    auto fa = face_vertices(f);
    for (std::size_t i = 0; i < 3; ++i) pa[i] = apply(to_b, a.pos[fa[i]]);
    const Vec2 lo_a = *std::min_element(pa.begin(), pa.end());
    for (int g : candidates) {
        auto fb = face_vertices(g);
        std::array<Vec2, 3> pb{};
        for (std::size_t i = 0; i < 3; ++i) pb[i] = b.pos[fb[i]];
        if (normal_form(pa) != normal_form(pb)) continue;
        const Vec2 lo_b = *std::min_element(pb.begin(), pb.end());
        std::array<int, 4> img{};
        img[f] = g;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (pa[i] - lo_a == pb[j] - lo_b) img[fa[i]] = fb[j];
        Perm4 p = Perm4::checked(img[0], img[1], img[2], img[3]);
        table[ta][f] = {tb_, p};
        table[tb_][g] = {ta, p.inverse()};
        return;
    }
    throw std::logic_error("layered construction: no matching face");
}

}  // namespace

Triangulation build_monodromy_triangulation(const MonodromyWord& w) {
    if (!w.has_both_letters())
        throw NotPseudoAnosov("monodromy " + w.str() + " does not contain both R and L; the bundle is not hyperbolic");
    const int n = static_cast<int>(w.size());
    std::vector<LayeredTet> tets;
    UnimodularMatrix basis;
    for (Letter x : w.letters()) {
        tets.push_back(layer(basis, x));
        basis = basis * generator(x);
    }
    GluingTable table(static_cast<std::size_t>(n));
    for (int k = 0; k + 1 < n; ++k)
        for (int f : {2, 3}) glue_faces(table, k, tets[k], f, UnimodularMatrix::identity(), k + 1, tets[k + 1], {0, 1});
    // basis is now W; the top of the stack is the image of the bottom under sign * W.
    const UnimodularMatrix back = (w.sign() < 0 ? -basis : basis).inverse();
    for (int f : {2, 3}) glue_faces(table, n - 1, tets[n - 1], f, back, 0, tets[0], {0, 1});
    return Triangulation(std::move(table), w);
}

namespace {

// Walk state around an edge: in tet, at edge {a,b}, about to leave through the
// face opposite d (having entered through the face opposite c).
struct Walk {
    int tet, a, b, c, d;
    friend bool operator==(const Walk&, const Walk&) = default;
};

Walk step(const Triangulation& t, const Walk& s) {
    const FaceGluing& g = t.gluing(s.tet, s.d);
    return {g.tet, g.perm[s.a], g.perm[s.b], g.perm[s.d], g.perm[s.c]};
}

}  // namespace

std::vector<EdgeClass> compute_edge_classes(const Triangulation& t) {
    const int n = t.size();
    std::vector<std::array<bool, 6>> seen(static_cast<std::size_t>(n), std::array<bool, 6>{});
    std::vector<EdgeClass> out;
    for (int tet = 0; tet < n; ++tet) {
        for (int e = 0; e < 6; ++e) {
            if (seen[tet][e]) continue;
            const int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
            const int c = kEdgeVertices[5 - e][0], d = kEdgeVertices[5 - e][1];
            const Walk start{tet, a, b, c, d};
            EdgeClass cls;
            Walk s = start;
            do {
                const int idx = edge_index(s.a, s.b);
                if (seen[s.tet][idx]) throw std::logic_error("edge walk revisited a corner");
                seen[s.tet][idx] = true;
                cls.corners.push_back({s.tet, idx});
                cls.tails.push_back(s.a);
                s = step(t, s);
            } while (!(s.tet == start.tet && edge_index(s.a, s.b) == e));
            out.push_back(std::move(cls));
        }
    }
    return out;  // produced in order of least corner
}

EulerReport euler_check(const Triangulation& t) {
    EulerReport r;
    r.edges = static_cast<int>(compute_edge_classes(t).size());
    r.faces = 2 * t.size();
    r.tets = t.size();
    if (r.value() != 0)
        throw EulerViolation("e - f + p = " + std::to_string(r.edges) + " - " + std::to_string(r.faces) + " + " + std::to_string(r.tets) +
                             " = " + std::to_string(r.value()));
    return r;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

CuspReport vertex_link(const Triangulation& t) {
    const int n = t.size();
    // Link triangles (t, v); their corners (t, v, w) sit on the ends of edges.
    UnionFind triangles(4 * n);
    UnionFind corners(16 * n);
    for (int tet = 0; tet < n; ++tet) {
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = t.gluing(tet, f);
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                triangles.unite(4 * tet + v, 4 * g.tet + g.perm[v]);
                for (int w = 0; w < 4; ++w) {
                    if (w == f || w == v) continue;
                    corners.unite(16 * tet + 4 * v + w, 16 * g.tet + 4 * g.perm[v] + g.perm[w]);
                }
            }
        }
    }
    std::map<int, int> component_of_root;
    std::vector<int> tri_count, corner_count;
    for (int i = 0; i < 4 * n; ++i) {
        int r = triangles.find(i);
        if (component_of_root.emplace(r, static_cast<int>(tri_count.size())).second) {
            tri_count.push_back(0);
            corner_count.push_back(0);
        }
        ++tri_count[component_of_root[r]];
    }
    std::vector<bool> counted(static_cast<std::size_t>(16 * n), false);
    for (int tet = 0; tet < n; ++tet)
        for (int v = 0; v < 4; ++v)
            for (int w = 0; w < 4; ++w) {
                if (w == v) continue;
                int r = corners.find(16 * tet + 4 * v + w);
                if (counted[r]) continue;
                counted[r] = true;
                ++corner_count[component_of_root[triangles.find(4 * tet + v)]];
            }
    CuspReport rep;
    rep.components = static_cast<int>(tri_count.size());
    rep.vertex_orbits = rep.components;
    for (std::size_t c = 0; c < tri_count.size(); ++c) {
        // Each link triangle has three sides, each shared by two triangles.
        const int F = tri_count[c];
        const int E = 3 * F / 2;
        const int V = corner_count[c];
        rep.euler.push_back(V - E + F);
    }
    return rep;
}

Automorphism Automorphism::identity(int n) {
    Automorphism a;
    a.tet_image.resize(static_cast<std::size_t>(n));
    std::iota(a.tet_image.begin(), a.tet_image.end(), 0);
    a.perm.assign(static_cast<std::size_t>(n), Perm4{});
    return a;
}

Automorphism Automorphism::compose(const Automorphism& other) const {
    Automorphism r;
    for (std::size_t t = 0; t < other.tet_image.size(); ++t) {
        const auto mid = static_cast<std::size_t>(other.tet_image[t]);
        r.tet_image.push_back(tet_image[mid]);
        r.perm.push_back(perm[mid] * other.perm[t]);
    }
    return r;
}

bool Automorphism::is_identity() const {
    for (std::size_t t = 0; t < tet_image.size(); ++t)
        if (tet_image[t] != static_cast<int>(t) || !perm[t].is_identity()) return false;
    return true;
}

namespace {

// Maps t1 -> t2 (tet_image/perm); checks every gluing is carried to a gluing.
bool commutes(const Triangulation& t1, const Triangulation& t2, const Automorphism& a) {
    const int n = t1.size();
    if (t2.size() != n || static_cast<int>(a.tet_image.size()) != n) return false;
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int t = 0; t < n; ++t) {
        int img = a.tet_image[t];
        if (img < 0 || img >= n || hit[img]) return false;
        hit[img] = true;
    }
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = t1.gluing(t, f);
            const int tf = a.tet_image[t];
            const int ff = a.perm[t][f];
            const FaceGluing& h = t2.gluing(tf, ff);
            if (h.tet != a.tet_image[g.tet]) return false;
            if (!(h.perm * a.perm[t] == a.perm[g.tet] * g.perm)) return false;
        }
    }
    return true;
}

// Extend tet 0 -> (target, p) along gluings. Empty when inconsistent or when
// not every tetrahedron is reached.
std::optional<Automorphism> propagate(const Triangulation& t1, const Triangulation& t2, int target, Perm4 p) {
    const int n = t1.size();
    Automorphism a;
    a.tet_image.assign(static_cast<std::size_t>(n), -1);
    a.perm.assign(static_cast<std::size_t>(n), Perm4{});
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    a.tet_image[0] = target;
    a.perm[0] = p;
    used[target] = true;
    std::queue<int> todo;
    todo.push(0);
    while (!todo.empty()) {
        int t = todo.front();
        todo.pop();
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = t1.gluing(t, f);
            const FaceGluing& h = t2.gluing(a.tet_image[t], a.perm[t][f]);
            const Perm4 q = h.perm * a.perm[t] * g.perm.inverse();
            if (a.tet_image[g.tet] == -1) {
                if (used[h.tet]) return std::nullopt;
                used[h.tet] = true;
                a.tet_image[g.tet] = h.tet;
                a.perm[g.tet] = q;
                todo.push(g.tet);
            } else if (a.tet_image[g.tet] != h.tet || !(a.perm[g.tet] == q)) {
                return std::nullopt;
            }
        }
    }
    for (int img : a.tet_image)
        if (img == -1) return std::nullopt;
    return a;
}

}  // namespace

bool is_automorphism(const Triangulation& t, const Automorphism& a) {
    return commutes(t, t, a);
}

bool reverses_edge(const Triangulation& t, const EdgeClass& e, const Automorphism& a) {
    (void)t;
    for (int i = 0; i < e.valence(); ++i) {
        const Corner& c = e.corners[static_cast<std::size_t>(i)];
        const Perm4& p = a.perm[static_cast<std::size_t>(c.tet)];
        const int tail = e.tails[static_cast<std::size_t>(i)];
        const int head = kEdgeVertices[c.edge][0] + kEdgeVertices[c.edge][1] - tail;
        const Corner image{a.tet_image[static_cast<std::size_t>(c.tet)], edge_index(p[tail], p[head])};
        auto it = std::find(e.corners.begin(), e.corners.end(), image);
        if (it == e.corners.end()) return false;
        // The image of the tail must be the head of the image corner.
        if (e.tails[static_cast<std::size_t>(it - e.corners.begin())] != p[head]) return false;
    }
    return true;
}

Automorphism find_involution(const Triangulation& t) {
    const auto classes = compute_edge_classes(t);
    for (const Perm4& p : Perm4::all()) {
        if (!p.is_double_transposition()) continue;
        auto a = propagate(t, t, 0, p);
        if (!a) continue;
        bool ok = true;
        for (int k = 0; k < t.size() && ok; ++k)
            ok = a->tet_image[k] == k && a->perm[k].is_double_transposition();
        for (const auto& e : classes) ok = ok && reverses_edge(t, e, *a);
        if (ok && a->compose(*a).is_identity()) return *a;
    }
    throw NoInvolution("no tetrahedron-preserving involution reversing every edge");
}

std::optional<Automorphism> find_isomorphism(const Triangulation& t1, const Triangulation& t2) {
    if (t1.size() != t2.size()) return std::nullopt;
    for (int target = 0; target < t2.size(); ++target)
        for (const Perm4& p : Perm4::all())
            if (auto a = propagate(t1, t2, target, p); a && commutes(t1, t2, *a)) return a;
    return std::nullopt;
}

bool are_isomorphic(const Triangulation& t1, const Triangulation& t2) {
    return find_isomorphism(t1, t2).has_value();
}

}  // namespace tb
