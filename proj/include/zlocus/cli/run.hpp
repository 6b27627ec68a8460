#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zlocus/cli/json_io.hpp"
#include "zlocus/cli/poly_text.hpp"
#include "zlocus/constructible/constructible_set.hpp"
#include "zlocus/error.hpp"
#include "zlocus/infinitesimal/quadric_example.hpp"
#include "zlocus/infinitesimal/tangent_system.hpp"
#include "zlocus/zerolocus/random_presentation.hpp"
#include "zlocus/zerolocus/zero_locus.hpp"

namespace zlocus::cli {

enum ExitCode : int { ok = 0, bad_input = 1, internal_error = 2, fuzz_mismatch = 3 };

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error("'" + path + "' is not valid JSON: " + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw input_error("'" + path + "': " + e.what());
    }
}

/// Splits "c1,c2,..." and parses each component as a Q(i) constant.
inline std::vector<GaussianRational> parse_point(const std::string& text) {
    std::vector<GaussianRational> pt;
    if (text.find_first_not_of(" \t") == std::string::npos) return pt;
    std::stringstream ss(text);
    std::string part;
    std::size_t idx = 0;
    while (std::getline(ss, part, ',')) {
        try {
            pt.push_back(parse_scalar(part));
        } catch (const parse_error& e) {
            throw input_error("point component " + std::to_string(idx) + ": " + e.what());
        } catch (const invariant_violation&) {
            throw input_error("point component " + std::to_string(idx) + " is not a constant");
        }
        ++idx;
    }
    return pt;
}

inline void write_json(const Json& j, const std::string& output, std::ostream& out) {
    std::string text = j.dump(2) + "\n";
    if (output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(output);
    if (!f) throw input_error("cannot write '" + output + "'");
    f << text;
}

inline const char* verdict(bool b) { return b ? "true" : "false"; }

/// The worked example: M = (x, y) in Q(i)[x, y] with relation column (-y, x)^T, section m = x.
inline ModulePresentation ideal_xy_presentation() {
    RingPtr R = PolyRing::make({"x", "y"});
    PolyMatrix A(R, 2, 1, {parse_poly("-y", R), parse_poly("x", R)});
    return {std::move(A), {Poly::one(R), Poly(R)}};
}

inline int example_ideal_xy(std::ostream& out) {
    const auto pres = ideal_xy_presentation();
    const auto locus = zero_locus(pres, true);
    out << "M = (x, y) in Q(i)[x, y], presented by A = (-y, x)^T; section m = x, lift y = (1, 0)\n";
    out << "cells:\n";
    for (const auto& c : locus.cells()) {
        out << "  D(" << format_poly(c.f()) << ") & V(";
        for (std::size_t k = 0; k < c.ideal().generators().size(); ++k)
            out << (k ? ", " : "") << format_poly(c.ideal().generators()[k]);
        out << ")\n";
    }
    out << "membership on {-2..2}^2 ('#' member, '.' not), rows y = 2..-2, columns x = -2..2:\n";
    std::vector<std::string> members;
    for (long y = 2; y >= -2; --y) {
        out << (y < 0 ? "  " : "   ") << y << " ";
        for (long x = -2; x <= 2; ++x) {
            std::vector<GaussianRational> pt{GaussianRational(x), GaussianRational(y)};
            bool in = contains_point(locus, pt);
            out << (in ? " #" : " .");
            if (in) members.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
        out << "\n";
    }
    std::sort(members.begin(), members.end());
    out << "members:";
    for (const auto& m : members) out << " " << m;
    out << "\n";
    return ok;
}

inline int example_quadric(std::ostream& out) {
    auto checks = quadric_example_checks();
    std::size_t passed = 0;
    for (const auto& c : checks) {
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << "\n";
        passed += c.passed ? 1 : 0;
    }
    out << passed << "/" << checks.size() << " checks passed\n";
    return passed == checks.size() ? ok : internal_error;
}

/// Entry point shared by the zlocus binary and the tests. args[0] is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Constructible zero loci of sections of coherent sheaves"};
    app.require_subcommand(1);

    std::string input, output, cells_path, point_text, chart_path;
    bool no_prune = false;
    std::size_t trials = 100, points = 25;
    std::uint64_t seed = 0;
    std::string example_name;

    auto* zl = app.add_subcommand("zero-locus", "Compute Z(M, m) from a module presentation");
    zl->add_option("--input", input, "Presentation JSON")->required();
    zl->add_flag("--no-prune", no_prune, "Keep cells that are empty over C");
    zl->add_option("--output", output, "Write the cells here instead of stdout");

    auto* member = app.add_subcommand("member", "Test a point against a cells file");
    member->add_option("--cells", cells_path, "Cells JSON")->required();
    member->add_option("--point", point_text, "Comma-separated coordinates")->required();

    auto* oracle = app.add_subcommand("oracle", "Rank test y(pt) in colspan A(pt)");
    oracle->add_option("--input", input, "Presentation JSON")->required();
    oracle->add_option("--point", point_text, "Comma-separated coordinates")->required();

    auto* inf = app.add_subcommand("inf-locus", "Zero locus of the infinitesimal invariant on a chart");
    inf->add_option("--chart", chart_path, "Chart JSON")->required();
    inf->add_flag("--no-prune", no_prune, "Keep cells that are empty over C");
    inf->add_option("--output", output, "Write the cells here instead of stdout");

    auto* fuzz = app.add_subcommand("fuzz", "Oracle-equivalence check on random presentations");
    fuzz->add_option("--trials", trials, "Number of random presentations")->required();
    fuzz->add_option("--seed", seed, "Random seed")->required();
    fuzz->add_option("--points", points, "Points per presentation");

    auto* example = app.add_subcommand("example", "Built-in examples");
    example->add_option("name", example_name, "paper-ideal | quadric")
        ->required()
        ->check(CLI::IsMember({"paper-ideal", "quadric"}));

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : bad_input;
    }

    try {
        if (*zl) {
            auto pres = presentation_from_json(read_json_file(input));
            write_json(to_json(zero_locus(pres, !no_prune)), output, out);
        } else if (*member) {
            auto set = constructible_from_json(read_json_file(cells_path));
            out << verdict(contains_point(set, parse_point(point_text))) << "\n";
        } else if (*oracle) {
            auto pres = presentation_from_json(read_json_file(input));
            out << verdict(solvable_at_point(pres, parse_point(point_text))) << "\n";
        } else if (*inf) {
            auto chart = chart_from_json(read_json_file(chart_path));
            write_json(to_json(infinitesimal_locus(chart, !no_prune)), output, out);
        } else if (*fuzz) {
            auto rep = fuzz_oracle_equivalence(seed, trials, points);
            out << "fuzz seed=" << rep.seed << " trials=" << rep.trials << " points=" << rep.points_per_trial
                << " checks=" << rep.checks << " solvable=" << rep.solvable << " mismatches=" << rep.mismatches << "\n";
            out << (rep.mismatches == 0 ? "PASS" : "FAIL") << "\n";
            return rep.mismatches == 0 ? ok : fuzz_mismatch;
        } else if (*example) {
            return example_name == "paper-ideal" ? example_ideal_xy(out) : example_quadric(out);
        }
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return bad_input;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_error;
    }
    return ok;
}

}  // namespace zlocus::cli
