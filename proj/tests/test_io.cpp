#include "doctest.h"

#include "tb/io.hpp"

using namespace tb;

TEST_CASE("triangulation json round trip") {
    for (const char* w : {"RL", "RRLRL", "-RLL"}) {
        CAPTURE(w);
        const Triangulation t = build_monodromy_triangulation(MonodromyWord::parse(w));
        const Json j = triangulation_to_json(t);
        CHECK(j.at("tetrahedra") == t.size());
        CHECK(gluing_table_from_json(j) == t.table());
        CHECK(word_from_json(j) == t.word());
        CHECK(dump(Json::parse(dump(j))) == dump(j));
    }
    const Json rl = triangulation_to_json(build_monodromy_triangulation(MonodromyWord("RL")));
    CHECK(rl.at("cusp") == Json{{"components", 1}, {"euler", 0}});
    CHECK(rl.at("edges").size() == 2);
    CHECK(rl.at("edges")[0].at("valence") == 6);
}

TEST_CASE("malformed triangulations") {
    Json j = triangulation_to_json(build_monodromy_triangulation(MonodromyWord("RL")));
    Json no_gluings = j;
    no_gluings.erase("gluings");
    CHECK_THROWS_AS(gluing_table_from_json(no_gluings), ParseError);
    Json bad_perm = j;
    bad_perm["gluings"][0][0][2] = Json::array({0, 0, 1, 2});
    CHECK_THROWS_AS(gluing_table_from_json(bad_perm), ParseError);
    // A wrong face entry parses but fails validation.
    Json wrong_face = j;
    wrong_face["gluings"][0][0][1] = 0;
    CHECK_FALSE(gluing_defects(gluing_table_from_json(wrong_face)).empty());
}

TEST_CASE("text listing") {
    const std::string text = triangulation_to_text(build_monodromy_triangulation(MonodromyWord("RL")));
    CHECK(text.find("% monodromy RL\n") == 0);
    CHECK(text.find("\n2\n") != std::string::npos);
}

TEST_CASE("assignment round trip") {
    const Triangulation t = build_monodromy_triangulation(MonodromyWord("RRL"));
    const MaxMinResult r = solve_max_min(build_constraints(t));
    REQUIRE(r.feasible());
    const Json j = assignment_to_json(r);
    CHECK(j.at("slack") == r.slack.str());
    CHECK(assignment_from_json(j).theta == r.assignment.theta);
    CHECK_THROWS_AS(assignment_from_json(Json{{"angles", Json::array({Json::array({"1/3"})})}}), ParseError);
    CHECK_THROWS_AS(assignment_from_json(Json{{"angles", Json::array({Json::array({"1/3", "x", "1/3", "1/3", "1/3", "1/3"})})}}), ParseError);
}

TEST_CASE("disc report rows") {
    const auto types = enumerate_fairly_normal_types();
    const Json rows = disc_report_json(types, single_tetrahedron_system());
    REQUIRE(rows.size() == types.size());
    int links = 0, bigons = 0;
    for (const Json& row : rows) {
        if (row.at("tag") == "vertex_link") {
            ++links;
            CHECK(row.at("min_area") == "0");
            CHECK(row.at("boundary_arcs") == 0);
        }
        if (row.at("tag") == "bigon") {
            ++bigons;
            CHECK(row.at("min_area") == "0");
            CHECK(row.at("face_compression") == false);
        }
        CHECK(row.at("crossings").size() == 6);
    }
    CHECK(links == 4);
    CHECK(bigons == 6);
}
