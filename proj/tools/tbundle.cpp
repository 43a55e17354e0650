// tbundle: command-line front end.
//
// Exit codes: 0 ok, 1 IO/parse/usage, 2 invalid monodromy, 3 infeasible
// angle system, 4 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tb/angles.hpp"
#include "tb/discs.hpp"
#include "tb/farey.hpp"
#include "tb/io.hpp"
#include "tb/triangulation.hpp"

namespace {

enum Exit { kOk = 0, kIo = 1, kMonodromy = 2, kInfeasible = 3, kVerify = 4 };

struct ExitError {
    int code;
    std::string message;
};

struct Options {
    std::string word;
    std::string matrix;
    std::string sign;
    std::string in;
    std::string out;
    std::string format;  // empty: the command's default
    std::string with_angles;
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f || !(f << text)) throw ExitError{kIo, "cannot write " + o.out};
}

std::optional<tb::MonodromyWord> monodromy(const Options& o) {
    if (!o.word.empty() && !o.matrix.empty()) throw ExitError{kIo, "give either --word or --matrix, not both"};
    if (!o.sign.empty() && o.word.empty()) throw ExitError{kIo, "--sign applies to --word only"};
    if (!o.word.empty()) {
        tb::MonodromyWord w = tb::MonodromyWord::parse(o.word);
        if (o.sign == "-") {
            if (w.sign() < 0) throw ExitError{kIo, "sign given twice"};
            w = tb::MonodromyWord(w.letter_string(), -1);
        }
        return w;
    }
    if (!o.matrix.empty()) return tb::factorize(tb::UnimodularMatrix::parse(o.matrix));
    return std::nullopt;
}

// Triangulation from --in, or built from the monodromy flags.
tb::Triangulation load(const Options& o) {
    if (!o.in.empty()) {
        if (!o.word.empty() || !o.matrix.empty()) throw ExitError{kIo, "give either --in or a monodromy, not both"};
        const tb::Json j = tb::parse_json_file(o.in);
        try {
            return tb::Triangulation(tb::gluing_table_from_json(j), tb::word_from_json(j));
        } catch (const tb::InvalidTriangulation& e) {
            throw ExitError{kIo, o.in + ": " + e.what()};
        }
    }
    const auto w = monodromy(o);
    if (!w) throw ExitError{kIo, "no triangulation given: use --in, --word or --matrix"};
    return tb::build_monodromy_triangulation(*w);
}

std::string triangulation_output(const tb::Triangulation& t, const std::string& format) {
    return format == "text" ? tb::triangulation_to_text(t) : tb::dump(tb::triangulation_to_json(t));
}

int cmd_build(const Options& o) {
    emit(o, triangulation_output(load(o), o.format));
    return kOk;
}

int cmd_angles(const Options& o) {
    const tb::Triangulation t = load(o);
    const tb::MaxMinResult r = tb::solve_max_min(tb::build_constraints(t));
    if (!r.feasible()) {
        emit(o, tb::dump(tb::infeasible_json()));
        std::cerr << "angle system infeasible\n";
        return kInfeasible;
    }
    if (o.format == "text") {
        std::ostringstream os;
        os << "slack " << r.slack.str() << '\n';
        for (const auto& row : r.assignment.theta) {
            for (std::size_t e = 0; e < row.size(); ++e) os << (e ? " " : "") << row[e].str();
            os << '\n';
        }
        emit(o, os.str());
    } else {
        emit(o, tb::dump(tb::assignment_to_json(r)));
    }
    return kOk;
}

int cmd_discs(const Options& o) {
    const auto types = tb::enumerate_fairly_normal_types();
    const auto local = tb::single_tetrahedron_system();
    emit(o, o.format == "text" ? tb::disc_report_text(types, local) : tb::dump(tb::disc_report_json(types, local)));
    return kOk;
}

int cmd_verify(const Options& o) {
    std::ostringstream report;
    bool ok = true;
    auto line = [&](const std::string& name, bool pass, const std::string& detail) {
        report << (pass ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) report << ": " << detail;
        report << '\n';
        ok = ok && pass;
    };

    std::optional<tb::Triangulation> tri;
    if (!o.in.empty()) {
        if (!o.word.empty() || !o.matrix.empty()) throw ExitError{kIo, "give either --in or a monodromy, not both"};
        const tb::Json j = tb::parse_json_file(o.in);
        const tb::GluingTable table = tb::gluing_table_from_json(j);
        const auto defects = tb::gluing_defects(table);
        std::string detail;
        for (const auto& d : defects) detail += (detail.empty() ? "" : "; ") + d;
        line("gluings", defects.empty(), detail);
        if (defects.empty()) tri.emplace(table, tb::word_from_json(j));
    } else {
        tri.emplace(load(o));
        line("gluings", true, "");
    }

    if (tri) {
        const tb::Triangulation& t = *tri;
        try {
            const tb::EulerReport e = tb::euler_check(t);
            line("euler", true, "e=" + std::to_string(e.edges) + " f=" + std::to_string(e.faces) + " p=" + std::to_string(e.tets));
        } catch (const tb::EulerViolation& ex) {
            line("euler", false, ex.what());
        }
        int min_valence = 0;
        for (const auto& c : tb::compute_edge_classes(t)) min_valence = min_valence ? std::min(min_valence, c.valence()) : c.valence();
        line("valence", min_valence >= 3, "minimum " + std::to_string(min_valence));
        const tb::CuspReport cusp = tb::vertex_link(t);
        line("cusp", cusp.components == 1 && cusp.euler.size() == 1 && cusp.euler[0] == 0,
             std::to_string(cusp.components) + " component(s)");
        try {
            const tb::Automorphism inv = tb::find_involution(t);
            std::string perms;
            for (const auto& p : inv.perm) perms += (perms.empty() ? "" : " ") + p.str();
            line("involution", true, perms);
        } catch (const tb::NoInvolution& ex) {
            line("involution", false, ex.what());
        }
        if (!o.with_angles.empty()) {
            const tb::AngleAssignment a = tb::assignment_from_json(tb::parse_json_file(o.with_angles));
            const tb::AssignmentReport r = tb::check_assignment(t, a);
            std::string detail;
            for (const auto& v : r.violations) detail += (detail.empty() ? "" : "; ") + v;
            line("angles", r.ok(), detail);
        }
    }
    emit(o, report.str());
    return ok ? kOk : kVerify;
}

int cmd_export(const Options& o) {
    emit(o, triangulation_output(load(o), o.format));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Layered triangulations of once-punctured torus bundles"};
    app.require_subcommand(1);
    Options o;

    auto add_monodromy = [&](CLI::App* c) {
        c->add_option("--word", o.word, "monodromy word over {R,L}, optional leading '-'");
        c->add_option("--matrix", o.matrix, "monodromy matrix \"a,b;c,d\"");
        c->add_option("--sign", o.sign, "sign of the word monodromy")->check(CLI::IsMember({"+", "-"}));
    };
    auto add_common = [&](CLI::App* c, const std::string& default_format) {
        c->add_option("--out", o.out, "output path (default stdout)");
        c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}))->default_str(default_format);
    };

    CLI::App* build = app.add_subcommand("build", "build the monodromy triangulation");
    add_monodromy(build);
    add_common(build, "json");

    CLI::App* angles = app.add_subcommand("angles", "solve the max-min angle problem");
    angles->add_option("--in", o.in, "triangulation JSON");
    add_monodromy(angles);
    add_common(angles, "json");

    CLI::App* discs = app.add_subcommand("discs", "fairly normal disc types of a truncated tetrahedron");
    add_common(discs, "json");

    CLI::App* verify = app.add_subcommand("verify", "check a triangulation");
    verify->add_option("--in", o.in, "triangulation JSON");
    add_monodromy(verify);
    verify->add_option("--with-angles", o.with_angles, "assignment JSON to check");
    verify->add_option("--out", o.out, "report path (default stdout)");

    CLI::App* exp = app.add_subcommand("export", "write a triangulation as JSON or a text gluing table");
    exp->add_option("--in", o.in, "triangulation JSON");
    add_monodromy(exp);
    add_common(exp, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kIo;
    }
    if (o.format.empty()) o.format = exp->parsed() ? "text" : "json";

    try {
        if (build->parsed()) return cmd_build(o);
        if (angles->parsed()) return cmd_angles(o);
        if (discs->parsed()) return cmd_discs(o);
        if (verify->parsed()) return cmd_verify(o);
        return cmd_export(o);
    } catch (const ExitError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const tb::NotUnimodular& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMonodromy;
    } catch (const tb::NotHyperbolic& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMonodromy;
    } catch (const tb::NotPseudoAnosov& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMonodromy;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    }
}
