#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "tb/triangulation.hpp"

using namespace tb;

namespace {

Triangulation build(const std::string& w, int sign = 1) {
    return build_monodromy_triangulation(MonodromyWord(w, sign));
}

std::set<std::vector<std::pair<int, int>>> class_sets(const Triangulation& t) {
    std::set<std::vector<std::pair<int, int>>> out;
    for (const EdgeClass& e : compute_edge_classes(t)) {
        std::vector<std::pair<int, int>> c;
        for (const Corner& k : e.corners) c.push_back({k.tet, k.edge});
        std::sort(c.begin(), c.end());
        out.insert(c);
    }
    return out;
}

}  // namespace

TEST_CASE("perm4 basics") {
    const Perm4 p(1, 2, 3, 0);
    CHECK((p * p.inverse()).is_identity());
    CHECK(p.sign() == -1);
    CHECK(Perm4(1, 0, 3, 2).is_double_transposition());
    CHECK_FALSE(Perm4(1, 0, 2, 3).is_double_transposition());
    CHECK(Perm4::all().size() == 24);
    CHECK_THROWS_AS(Perm4::checked(0, 0, 1, 2), std::invalid_argument);
    CHECK(p.str() == "1230");
    for (int i = 0; i < 4; ++i) CHECK((p * Perm4(3, 2, 1, 0))[i] == p[3 - i]);
}

TEST_CASE("figure-eight triangulation") {
    const Triangulation t = build("RL");
    CHECK(t.size() == 2);
    const auto classes = compute_edge_classes(t);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].valence() == 6);
    CHECK(classes[1].valence() == 6);
    CHECK(class_sets(t) == oracle::edge_orbits(t.table()));
    const CuspReport cusp = vertex_link(t);
    CHECK(cusp.components == 1);
    CHECK(cusp.euler == std::vector<int>{0});
    CHECK(euler_check(t).value() == 0);
}

TEST_CASE("single-letter words are rejected") {
    CHECK_THROWS_AS(build("R"), NotPseudoAnosov);
    CHECK_THROWS_AS(build("LLL"), NotPseudoAnosov);
}

TEST_CASE("sweep against orbit, cusp and involution oracles") {
    for (const std::string& w : oracle::cyclic_words_with_both_letters(7)) {
        for (int sign : {+1, -1}) {
            CAPTURE(w);
            CAPTURE(sign);
            const Triangulation t = build(w, sign);
            REQUIRE(t.size() == static_cast<int>(w.size()));
            CHECK(gluing_defects(t.table()).empty());

            const auto classes = compute_edge_classes(t);
            CHECK(class_sets(t) == oracle::edge_orbits(t.table()));
            int total = 0;
            for (const auto& e : classes) {
                CHECK(e.valence() >= 3);
                total += e.valence();
            }
            CHECK(total == 6 * t.size());
            // e - f + p = 0 with f = 2p.
            CHECK(static_cast<int>(classes.size()) == t.size());
            CHECK(euler_check(t).value() == 0);

            const oracle::Cusp c = oracle::cusp(t.table());
            const CuspReport cusp = vertex_link(t);
            CHECK(cusp.components == c.components);
            CHECK(cusp.euler == c.euler);
            CHECK(c.components == 1);
            CHECK(c.euler == std::vector<int>{0});

            if (t.size() <= 6) {
                const auto all = oracle::all_involutions(t.table());
                const Automorphism inv = find_involution(t);
                CHECK(std::find(all.begin(), all.end(), inv.perm) != all.end());
            }
        }
    }
}

TEST_CASE("involution properties") {
    for (const std::string& w : oracle::cyclic_words_with_both_letters(8)) {
        CAPTURE(w);
        const Triangulation t = build(w);
        const Automorphism inv = find_involution(t);
        CHECK(is_automorphism(t, inv));
        CHECK_FALSE(inv.is_identity());
        CHECK(inv.compose(inv).is_identity());
        for (int k = 0; k < t.size(); ++k) {
            CHECK(inv.tet_image[static_cast<std::size_t>(k)] == k);
            CHECK(inv.perm[static_cast<std::size_t>(k)].is_double_transposition());
        }
        for (const auto& e : compute_edge_classes(t)) CHECK(reverses_edge(t, e, inv));
    }
    CHECK(find_involution(build("RL")).perm == std::vector<Perm4>{Perm4(1, 0, 3, 2), Perm4(1, 0, 3, 2)});
}

TEST_CASE("gluing defects are reported") {
    GluingTable table = build("RL").table();
    CHECK(gluing_defects(table).empty());

    GluingTable broken = table;
    broken[0][0].perm = broken[0][0].perm * Perm4(1, 0, 2, 3);
    CHECK_FALSE(gluing_defects(broken).empty());
    CHECK_THROWS_AS((void)Triangulation(broken), InvalidTriangulation);

    GluingTable out_of_range = table;
    out_of_range[1][2].tet = 5;
    CHECK_FALSE(gluing_defects(out_of_range).empty());

    // Still involutive, but the composed permutation is even.
    GluingTable even = table;
    const FaceGluing g = even[0][0];
    even[0][0].perm = g.perm * Perm4(0, 2, 1, 3);
    even[static_cast<std::size_t>(g.tet)][static_cast<std::size_t>(g.perm[0])].perm = (g.perm * Perm4(0, 2, 1, 3)).inverse();
    CHECK_FALSE(gluing_defects(even).empty());
}

TEST_CASE("isomorphism is an equivalence relation") {
    std::mt19937 rng(11);
    auto shuffle = [&](const Triangulation& t) {
        std::vector<int> sigma(static_cast<std::size_t>(t.size()));
        std::iota(sigma.begin(), sigma.end(), 0);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        // One parity throughout, so every gluing stays odd.
        const int parity = rng() % 2 ? 1 : -1;
        std::vector<Perm4> pi;
        while (static_cast<int>(pi.size()) < t.size()) {
            const Perm4 p = Perm4::all()[rng() % 24];
            if (p.sign() == parity) pi.push_back(p);
        }
        return Triangulation(oracle::relabel(t.table(), sigma, pi));
    };
    for (const std::string& w : {"RL", "RRL", "RLLR", "RRLRL", "RRRLLL"}) {
        CAPTURE(w);
        const Triangulation a = build(w);
        const Triangulation b = shuffle(a);
        const Triangulation c = shuffle(b);
        CHECK(are_isomorphic(a, a));
        CHECK(are_isomorphic(a, b));
        CHECK(are_isomorphic(b, a));
        CHECK(are_isomorphic(b, c));
        CHECK(are_isomorphic(a, c));
        const auto iso = find_isomorphism(a, b);
        REQUIRE(iso);
        CHECK(class_sets(b).size() == class_sets(a).size());
    }
    CHECK_FALSE(are_isomorphic(build("RRLL"), build("RRRL")));
    CHECK_FALSE(are_isomorphic(build("RL"), build("RRL")));
}
