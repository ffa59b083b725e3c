// Command-line front end: analyze germs, first-order deformations and plane
// curve strata. See README.md for usage.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "equimult/cli.hpp"

namespace {

bool use_color() { return ::isatty(STDOUT_FILENO) != 0 && std::getenv("NO_COLOR") == nullptr; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equimultiple deformations of plane curve germs over Q", "equimult"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "Emit a single JSON object instead of text");

    std::string f_expr;
    std::string g_expr;
    std::vector<std::string> section;
    int degree = 0;

    auto* analyze = app.add_subcommand("analyze", "Local invariants of the germ f at the origin");
    analyze->add_option("f", f_expr, "Curve germ")->required();
    analyze->fallthrough();

    auto* deform = app.add_subcommand("deform", "Equimultiplicity of f + eps*g");
    deform->add_option("f", f_expr, "Curve germ")->required();
    deform->add_option("g", g_expr, "Deformation direction")->required();
    deform->add_option("--section", section, "Section components a b")->expected(2);
    deform->fallthrough();

    auto* sections = app.add_subcommand("sections", "Admissible section constants (a0, b0)");
    sections->add_option("f", f_expr, "Curve germ")->required();
    sections->add_option("g", g_expr, "Deformation direction")->required();
    sections->fallthrough();

    auto* p2 = app.add_subcommand("p2", "Dimensions of the m-fold stratum of |O(d)| on P^2");
    p2->add_option("f", f_expr, "Affine equation with the point at the origin")->required();
    p2->add_option("--degree", degree, "Degree d of the linear system")->required();
    p2->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    equimult::cli::Report report;
    if (analyze->parsed()) {
        report = equimult::cli::cmd_analyze(f_expr);
    } else if (deform->parsed()) {
        std::optional<std::pair<std::string, std::string>> s;
        if (section.size() == 2) s.emplace(section[0], section[1]);
        report = equimult::cli::cmd_deform(f_expr, g_expr, s);
    } else if (sections->parsed()) {
        report = equimult::cli::cmd_sections(f_expr, g_expr);
    } else {
        report = equimult::cli::cmd_p2(f_expr, degree);
    }

    std::cout << (json ? equimult::cli::render_json(report) : equimult::cli::render_text(report, use_color()));
    return report.exit_code();
}
