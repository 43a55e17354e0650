#include "tb/io.hpp"

#include <fstream>
#include <sstream>

namespace tb {

Json triangulation_to_json(const Triangulation& t) {
    Json j;
    j["word"] = t.word() ? t.word()->letter_string() : std::string();
    j["sign"] = t.word() ? t.word()->sign() : 1;
    j["tetrahedra"] = t.size();
    Json gluings = Json::array();
    for (int tet = 0; tet < t.size(); ++tet) {
        Json faces = Json::array();
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = t.gluing(tet, f);
            faces.push_back(Json::array({g.tet, g.perm[f], Json::array({g.perm[0], g.perm[1], g.perm[2], g.perm[3]})}));
        }
        gluings.push_back(std::move(faces));
    }
    j["gluings"] = std::move(gluings);
    Json edges = Json::array();
    for (const EdgeClass& e : compute_edge_classes(t)) {
        Json corners = Json::array();
        for (const Corner& c : e.corners) corners.push_back(Json::array({c.tet, c.edge}));
        edges.push_back({{"valence", e.valence()}, {"corners", std::move(corners)}});
    }
    j["edges"] = std::move(edges);
    const CuspReport cusp = vertex_link(t);
    j["cusp"] = {{"components", cusp.components}, {"euler", cusp.components == 1 ? Json(cusp.euler[0]) : Json(cusp.euler)}};
    return j;
}

GluingTable gluing_table_from_json(const Json& j) {
    try {
        const int n = j.at("tetrahedra").get<int>();
        const Json& g = j.at("gluings");
        if (n <= 0 || !g.is_array() || static_cast<int>(g.size()) != n) throw ParseError("\"gluings\" must list one entry per tetrahedron");
        GluingTable table(static_cast<std::size_t>(n));
        for (int tet = 0; tet < n; ++tet) {
            const Json& faces = g.at(static_cast<std::size_t>(tet));
            if (!faces.is_array() || faces.size() != 4) throw ParseError("tetrahedron " + std::to_string(tet) + " must have four face gluings");
            for (int f = 0; f < 4; ++f) {
                const Json& e = faces.at(static_cast<std::size_t>(f));
                const auto p = e.at(2).get<std::vector<int>>();
                if (p.size() != 4) throw ParseError("permutation must have four entries");
                Perm4 perm;
                try {
                    perm = Perm4::checked(p[0], p[1], p[2], p[3]);
                } catch (const std::invalid_argument& ex) {
                    throw ParseError(std::string("tetrahedron ") + std::to_string(tet) + ": " + ex.what());
                }
                // The face entry is redundant with the permutation; a mismatch
                // is kept as an invalid target so validation reports it.
                const int target = e.at(0).get<int>();
                table[static_cast<std::size_t>(tet)][static_cast<std::size_t>(f)] = {e.at(1).get<int>() == perm[f] ? target : -1, perm};
            }
        }
        return table;
    } catch (const Json::exception& ex) {
        throw ParseError(std::string("malformed triangulation: ") + ex.what());
    }
}

std::optional<MonodromyWord> word_from_json(const Json& j) {
    if (!j.contains("word") || !j["word"].is_string() || j["word"].get<std::string>().empty()) return std::nullopt;
    try {
        const int sign = j.contains("sign") ? j["sign"].get<int>() : 1;
        return MonodromyWord(j["word"].get<std::string>(), sign);
    } catch (const std::exception& ex) {
        throw ParseError(std::string("bad word in triangulation file: ") + ex.what());
    }
}

std::string triangulation_to_text(const Triangulation& t) {
    std::ostringstream os;
    if (t.word()) os << "% monodromy " << t.word()->str() << '\n';
    os << "% face i is opposite vertex i; entry tet:perm sends vertex k to perm[k]\n";
    os << t.size() << '\n';
    for (int tet = 0; tet < t.size(); ++tet) {
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = t.gluing(tet, f);
            os << (f ? "  " : "") << g.tet << ':' << g.perm.str();
        }
        os << '\n';
    }
    return os.str();
}

Json assignment_to_json(const MaxMinResult& r) {
    Json angles = Json::array();
    for (const auto& row : r.assignment.theta) {
        Json a = Json::array();
        for (const Rational& x : row) a.push_back(x.str());
        angles.push_back(std::move(a));
    }
    return {{"slack", r.slack.str()}, {"angles", std::move(angles)}};
}

Json infeasible_json() {
    return {{"status", "infeasible"}};
}

AngleAssignment assignment_from_json(const Json& j) {
    try {
        AngleAssignment a;
        for (const Json& row : j.at("angles")) {
            if (!row.is_array() || row.size() != 6) throw ParseError("each tetrahedron needs six angles");
            std::array<Rational, 6> r;
            for (std::size_t e = 0; e < 6; ++e) r[e] = Rational::parse(row[e].get<std::string>());
            a.theta.push_back(r);
        }
        return a;
    } catch (const Json::exception& ex) {
        throw ParseError(std::string("malformed assignment: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("malformed assignment: ") + ex.what());
    }
}

Json disc_report_json(const std::vector<DiscType>& types, const ConstraintSystem& local) {
    Json rows = Json::array();
    for (const DiscType& d : types) {
        rows.push_back({{"tag", to_string(d.tag)},
                        {"crossings", d.crossings},
                        {"boundary_arcs", d.boundary_arcs()},
                        {"min_area", min_area_over_polytope(d, local).str()},
                        {"face_compression", has_face_compression(d).exists}});
    }
    return rows;
}

std::string disc_report_text(const std::vector<DiscType>& types, const ConstraintSystem& local) {
    std::ostringstream os;
    os << "# tag crossings boundary_arcs min_area face_compression\n";
    for (const DiscType& d : types) {
        os << to_string(d.tag) << ' ';
        for (int c : d.crossings) os << c;
        os << ' ' << d.boundary_arcs() << ' ' << min_area_over_polytope(d, local).str() << ' ' << (has_face_compression(d).exists ? "yes" : "no")
           << '\n';
    }
    return os.str();
}

std::string dump(const Json& j) {
    return j.dump(2) + "\n";
}

Json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& ex) {
        throw ParseError(path + ": " + ex.what());
    }
}

}  // namespace tb
