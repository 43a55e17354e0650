#pragma once

// JSON and text forms of triangulations, angle assignments and disc reports.
// JSON objects use sorted keys; rationals are "p/q" strings.

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "tb/angles.hpp"
#include "tb/discs.hpp"
#include "tb/triangulation.hpp"

namespace tb {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

Json triangulation_to_json(const Triangulation& t);
// Gluings as written, without validation; throws ParseError on malformed input.
GluingTable gluing_table_from_json(const Json& j);
// The recorded word, if present.
std::optional<MonodromyWord> word_from_json(const Json& j);

// One line per tetrahedron: the four face gluings as "tet:perm".
std::string triangulation_to_text(const Triangulation& t);

Json assignment_to_json(const MaxMinResult& r);
Json infeasible_json();
AngleAssignment assignment_from_json(const Json& j);

Json disc_report_json(const std::vector<DiscType>& types, const ConstraintSystem& local);
std::string disc_report_text(const std::vector<DiscType>& types, const ConstraintSystem& local);

// Serialised exactly as written to files: pretty-printed with a newline.
std::string dump(const Json& j);
Json parse_json_file(const std::string& path);

}  // namespace tb
