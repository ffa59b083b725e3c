#ifndef EQUIMULT_CLI_HPP
#define EQUIMULT_CLI_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "equimult/defo.hpp"
#include "equimult/parse.hpp"
#include "equimult/plane.hpp"
#include "equimult/singular.hpp"

namespace equimult::cli {

using Json = nlohmann::ordered_json;

enum class Status { ok, error, internal_error };

/// Outcome of one CLI command. Key order of inputs and results is insertion
/// order, so serialization is deterministic.
struct Report {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    Status status = Status::ok;
    std::string message;

    int exit_code() const {
        switch (status) {
        case Status::ok: return 0;
        case Status::error: return 1;
        case Status::internal_error: return 2;
        }
        return 2;
    }
};

namespace detail {

inline Json rational_json(const Rational& q) { return to_string(q); }

inline Json vector_json(const RationalVector& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(rational_json(c));
    return out;
}

inline Json solutions_json(const AffineSolutionSet& s) {
    Json out;
    out["empty"] = s.empty;
    if (s.empty) return out;
    out["dimension"] = s.dimension();
    out["particular"] = vector_json(s.particular);
    Json dirs = Json::array();
    for (const auto& d : s.directions) dirs.push_back(vector_json(d));
    out["directions"] = std::move(dirs);
    return out;
}

/// Parses an argument and echoes its canonical form into the report inputs.
inline BiPoly parse_input(Report& r, const std::string& name, std::string_view source) {
    r.inputs[name] = std::string(source);
    BiPoly p = parse_poly(source);
    r.inputs[name] = to_string(p);
    return p;
}

/// Runs body, turning exceptions into report status. Domain and parse
/// failures are user errors; logic errors are internal faults.
template <class Body>
Report run(std::string command, Body&& body) {
    Report r;
    r.command = std::move(command);
    try {
        body(r);
    } catch (const std::logic_error& e) {
        const bool user_error = dynamic_cast<const std::invalid_argument*>(&e) != nullptr ||
                                dynamic_cast<const std::domain_error*>(&e) != nullptr;
        r.status = user_error ? Status::error : Status::internal_error;
        r.message = e.what();
    } catch (const std::exception& e) {
        r.status = dynamic_cast<const ParseError*>(&e) ? Status::error : Status::internal_error;
        r.message = e.what();
    }
    if (r.status != Status::ok) r.results = Json::object();
    return r;
}

} // namespace detail

inline Report cmd_analyze(std::string_view f_expr) {
    return detail::run("analyze", [&](Report& r) {
        const SingularityReport s = analyze(detail::parse_input(r, "f", f_expr));
        r.results["m"] = s.m;
        r.results["tangent_cone"] = to_string(s.tangent_cone);
        r.results["unitangential"] = s.unitangential;
        r.results["deg_Z"] = s.degZ;
        r.results["ambiguity"] = s.ambiguity;
    });
}

inline Report cmd_deform(std::string_view f_expr, std::string_view g_expr,
                         std::optional<std::pair<std::string, std::string>> section = std::nullopt) {
    return detail::run("deform", [&](Report& r) {
        const BiPoly f = detail::parse_input(r, "f", f_expr);
        const BiPoly g = detail::parse_input(r, "g", g_expr);
        std::optional<SectionGerm> s;
        if (section) {
            s = SectionGerm{detail::parse_input(r, "a", section->first),
                            detail::parse_input(r, "b", section->second)};
        }

        const CurveGerm germ(f);
        r.results["m"] = germ.m();
        r.results["admits_section"] = admits_section(f, g);
        r.results["solutions"] = detail::solutions_json(solve_sections(f, g).solutions);
        if (s) {
            const bool algebraic = is_equimultiple_along(f, g, *s);
            const bool direct = is_equimultiple_along_direct(f, g, *s);
            if (algebraic != direct) {
                throw std::logic_error("equimultiplicity criterion and direct check disagree");
            }
            r.results["equimultiple"] = algebraic;
        }
    });
}

inline Report cmd_sections(std::string_view f_expr, std::string_view g_expr) {
    return detail::run("sections", [&](Report& r) {
        const BiPoly f = detail::parse_input(r, "f", f_expr);
        const BiPoly g = detail::parse_input(r, "g", g_expr);
        const SingularityReport s = analyze(f);
        const SectionSolution sol = solve_sections(f, g);
        r.results["m"] = s.m;
        r.results["unitangential"] = s.unitangential;
        r.results["ambiguity"] = s.ambiguity;
        r.results["solutions"] = detail::solutions_json(sol.solutions);
    });
}

inline Report cmd_p2(std::string_view f_expr, int degree) {
    return detail::run("p2", [&](Report& r) {
        r.inputs["f"] = std::string(f_expr);
        r.inputs["degree"] = degree;
        const BiPoly f = detail::parse_input(r, "f", f_expr);
        if (degree < 1) throw std::invalid_argument("degree bound must be >= 1");
        const DimensionReport d = verify_smooth_expected(PlaneCurve(f, static_cast<unsigned>(degree)));
        r.results["d"] = d.d;
        r.results["m"] = d.m;
        r.results["dim_L"] = d.dim_L;
        r.results["deg_Z"] = d.deg_Z;
        r.results["h0_JZ"] = d.h0_JZ;
        r.results["unitangential"] = d.unitangential;
        r.results["tangent_dim"] = d.tangent_dim;
        r.results["expected_dim"] = d.expected_dim;
        r.results["jacobian_rank"] = d.jacobian_rank;
        r.results["smooth_of_expected"] = d.smooth_of_expected;
        if (!d.smooth_of_expected) {
            r.results["flag"] = "tangent_dim " + std::to_string(d.tangent_dim) + " != expected_dim " +
                                std::to_string(d.expected_dim);
        }
    });
}

inline std::string render_json(const Report& r) {
    Json out;
    out["command"] = r.command;
    out["inputs"] = r.inputs;
    out["results"] = r.status == Status::ok ? r.results : Json(nullptr);
    out["status"] = r.status == Status::ok ? "ok" : "error";
    if (r.status != Status::ok) out["message"] = r.message;
    return out.dump(2) + "\n";
}

namespace detail {

inline std::string text_value(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        if (v.empty()) return "[]";
        const bool nested = !v.empty() && v.front().is_array();
        std::string out = nested ? "[" : "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ", ";
            out += text_value(v[i]);
        }
        return out + (nested ? "]" : ")");
    }
    return v.dump();
}

/// Nested objects flatten to dotted keys.
inline void flatten(const Json& obj, const std::string& prefix,
                    std::vector<std::pair<std::string, std::string>>& out) {
    for (const auto& [key, value] : obj.items()) {
        if (value.is_object()) {
            flatten(value, prefix + key + ".", out);
        } else {
            out.emplace_back(prefix + key, text_value(value));
        }
    }
}

inline void text_section(std::ostringstream& os, const char* title, const Json& obj) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(obj, "", rows);
    if (rows.empty()) return;
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    os << title << ":\n";
    for (const auto& [k, v] : rows) os << "  " << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

} // namespace detail

inline std::string render_text(const Report& r, bool color = false) {
    std::ostringstream os;
    os << "command: " << r.command << "\n";
    detail::text_section(os, "inputs", r.inputs);
    if (r.status == Status::ok) detail::text_section(os, "results", r.results);
    const char* on = "";
    const char* off = "";
    if (color) {
        on = r.status == Status::ok ? "\x1b[32m" : "\x1b[31m";
        off = "\x1b[0m";
    }
    if (r.status == Status::ok) {
        os << "status: " << on << "ok" << off << "\n";
    } else {
        os << "status: " << on << "error" << off << ": " << r.message << "\n";
    }
    return os.str();
}

} // namespace equimult::cli

#endif
