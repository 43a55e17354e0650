#include "doctest.h"

#include <fstream>
#include <map>
#include <random>

#include "json.hpp"
#include "oracles.hpp"
#include "tb/discs.hpp"

using namespace tb;

namespace {

const std::vector<DiscType>& all_types() {
    static const std::vector<DiscType> types = enumerate_fairly_normal_types();
    return types;
}

nlohmann::json golden() {
    std::ifstream in(TB_GOLDEN_DIR "/disc_types.json");
    REQUIRE(in);
    return nlohmann::json::parse(in);
}

Chord chord(int c1, int p1, int c2, int p2) {
    CurvePoint a{c1, p1}, b{c2, p2};
    if (b < a) std::swap(a, b);
    return {a, b};
}

}  // namespace

TEST_CASE("truncated tetrahedron cells") {
    const auto& tt = TruncatedTetrahedron::standard();
    for (int cell = 0; cell < kEdgeCellCount; ++cell) CHECK(tt.cells_on(cell).size() == 2);
    for (const auto& h : tt.hexagons) {
        REQUIRE(h.sides.size() == 6);
        for (int i = 0; i < 6; ++i) CHECK(is_interior_cell(h.sides[static_cast<std::size_t>(i)].cell) == (i % 2 == 0));
        CHECK(TruncatedTetrahedron::adjacent_sides(h, 0, 5));
        CHECK_FALSE(TruncatedTetrahedron::adjacent_sides(h, 0, 3));
    }
    for (const auto& t : tt.triangles) CHECK(t.sides.size() == 3);
    CHECK(boundary_cell(0, 1) == 6);
    CHECK(boundary_cell(3, 2) == 17);
    for (int cell = 6; cell < 18; ++cell) {
        const BoundaryEdge b = boundary_edge_of(cell);
        CHECK(boundary_cell(b.v, b.f) == cell);
    }
}

TEST_CASE("canonical small discs") {
    for (int v = 0; v < 4; ++v) {
        const DiscType d = vertex_link_disc(v);
        CHECK(d.tag == DiscTag::VertexLink);
        CHECK(fairly_normal_defects(d).empty());
        CHECK(d.boundary_arcs() == 0);
        CHECK_FALSE(has_face_compression(d).exists);
    }
    for (int e = 0; e < 6; ++e) {
        const DiscType d = bigon_disc(e);
        CHECK(d.tag == DiscTag::Bigon);
        CHECK(fairly_normal_defects(d).empty());
        CHECK(d.boundary_arcs() == 2);
        CHECK_FALSE(has_face_compression(d).exists);
    }
    for (int e = 0; e < 3; ++e) {
        const DiscType d = quad_disc(e);
        CHECK(d.tag == DiscTag::Generic);
        CHECK(fairly_normal_defects(d).empty());
        CHECK_FALSE(has_face_compression(d).exists);
    }
}

TEST_CASE("defects are detected") {
    // Two arcs in one triangle.
    DiscType two = DiscType::from_arcs({}, {std::vector<Chord>{chord(6, 0, 7, 0), chord(6, 1, 8, 0)}, {}, {}, {}});
    CHECK_FALSE(fairly_normal_defects(two).empty());

    // A hexagon arc between adjacent sides (interior edge 01 and B(1, 3)).
    const DiscType adj = DiscType::from_arcs({{{}, {}, {}, std::vector<Chord>{chord(0, 0, boundary_cell(1, 3), 0)}}}, {});
    CHECK_FALSE(fairly_normal_defects(adj).empty());

    // Two parallel vertex links: two curves.
    DiscType twice = vertex_link_disc(0);
    const DiscType other = vertex_link_disc(3);
    for (int f = 0; f < 4; ++f)
        for (const Chord& c : other.hexagon_arcs[static_cast<std::size_t>(f)]) twice.hexagon_arcs[static_cast<std::size_t>(f)].push_back(c);
    twice = DiscType::from_arcs(twice.hexagon_arcs, twice.triangle_arcs);
    CHECK_FALSE(fairly_normal_defects(twice).empty());
}

TEST_CASE("enumeration matches the frozen golden count") {
    const auto& types = all_types();
    const auto g = golden();
    CHECK(static_cast<int>(types.size()) == g.at("fairly_normal_type_count").get<int>());
    std::set<std::string> keys;
    for (const auto& d : types) {
        CHECK(fairly_normal_defects(d).empty());
        CHECK(d.tag == classify(d));
        keys.insert(d.key());
    }
    CHECK(keys.size() == types.size());

    std::map<DiscTag, int> tags;
    for (const auto& d : types) ++tags[d.tag];
    CHECK(tags[DiscTag::VertexLink] == g.at("tags").at("vertex_link").get<int>());
    CHECK(tags[DiscTag::Bigon] == g.at("tags").at("bigon").get<int>());
    CHECK(tags[DiscTag::Arclike] == g.at("tags").at("arclike").get<int>());
    CHECK(tags[DiscTag::Generic] == g.at("tags").at("generic").get<int>());
    CHECK(tags[DiscTag::WeakBigon] == 0);
    CHECK(tags[DiscTag::ModifiedVertexLink] == 0);
    CHECK(tags[DiscTag::FusedVertexLink] == 0);
}

TEST_CASE("enumeration matches the arc-multiset oracle") {
    oracle::DiscRealiser realiser;
    std::set<std::string> expected;
    for (const auto& d : realiser.enumerate()) expected.insert(d.key());
    std::set<std::string> got;
    for (const auto& d : all_types()) got.insert(d.key());
    CHECK(expected.size() == got.size());
    CHECK(expected == got);
}

TEST_CASE("enumeration is closed under relabelling") {
    std::set<std::string> keys;
    for (const auto& d : all_types()) keys.insert(d.key());
    std::array<int, 4> s{0, 1, 2, 3};
    do {
        for (const auto& d : all_types()) {
            const DiscType r = relabel(d, s);
            CHECK(keys.count(r.key()) == 1);
            CHECK(classify(r) == d.tag);
        }
    } while (std::next_permutation(s.begin(), s.end()));
    const int orbits = count_orbits(all_types());
    CHECK(orbits == golden().at("orbits").get<int>());
}

TEST_CASE("area functional is linear in the angles") {
    std::mt19937 rng(5);
    const auto& types = all_types();
    for (int trial = 0; trial < 100; ++trial) {
        std::array<Rational, 6> theta;
        for (auto& x : theta) x = Rational(static_cast<std::int64_t>(rng() % 97), 96);
        const DiscType& d = types[rng() % types.size()];
        CHECK(area_expr(d).evaluate(theta) == oracle::area_at(d, theta));
    }
}

TEST_CASE("polytope extremes match the vertex oracle") {
    const ConstraintSystem local = single_tetrahedron_system();
    for (const auto& d : all_types()) {
        Rational lo, hi;
        bool first = true;
        for (const auto& v : oracle::local_polytope_vertices()) {
            const Rational a = oracle::area_at(d, v);
            if (first || a < lo) lo = a;
            if (first || a > hi) hi = a;
            first = false;
        }
        CHECK(min_area_over_polytope(d, local) == lo);
        CHECK(max_area_over_polytope(d, local) == hi);
    }
}

TEST_CASE("hand-built special patterns") {
    const DiscType arclike = [] {
        for (const auto& d : all_types())
            if (d.tag == DiscTag::Arclike) return d;
        return DiscType{};
    }();
    REQUIRE(arclike.tag == DiscTag::Arclike);
    int returning = 0;
    for (const auto& arcs : arclike.triangle_arcs)
        for (const Chord& c : arcs) returning += c.a.cell == c.b.cell;
    CHECK(returning == 2);
    CHECK(arclike.boundary_arcs() == 2);

    // Edge ids: 01=0, 02=1, 03=2, 12=3, 13=4, 23=5.
    // Link of vertex 0 with a finger pushed through B(1, 3) into triangle 1.
    // The finger needs an arc from edge 01 to the adjacent side B(1, 3) in
    // hexagon 3, so it is not fairly normal, but the pattern is recognised.
    const int b13 = boundary_cell(1, 3);
    std::array<std::vector<Chord>, 4> hex, tri;
    hex[3] = {chord(0, 0, b13, 0), chord(b13, 1, 1, 0)};
    hex[2] = {chord(0, 0, 2, 0)};
    hex[1] = {chord(1, 0, 2, 0)};
    tri[1] = {chord(b13, 0, b13, 1)};
    const DiscType modified = DiscType::from_arcs(hex, tri);
    CHECK(curve_sides(modified).simple_closed);
    CHECK_FALSE(fairly_normal_defects(modified).empty());
    CHECK(classify(modified) == DiscTag::ModifiedVertexLink);

    // Band sum of the links of 0 and 1 inside hexagon 3. The band leaves an
    // arc returning to edge 01, so again not fairly normal.
    std::array<std::vector<Chord>, 4> fhex;
    fhex[3] = {chord(0, 0, 0, 1), chord(3, 0, 1, 0)};
    fhex[2] = {chord(0, 0, 2, 0), chord(0, 1, 4, 0)};
    fhex[1] = {chord(1, 0, 2, 0)};
    fhex[0] = {chord(3, 0, 4, 0)};
    const DiscType fused = DiscType::from_arcs(fhex, {});
    CHECK(fused.crossings == std::array<int, 6>{2, 1, 1, 1, 1, 0});
    CHECK(curve_sides(fused).simple_closed);
    CHECK_FALSE(fairly_normal_defects(fused).empty());
    CHECK(classify(fused) == DiscTag::FusedVertexLink);
}
