#ifndef SICVI_CLI_REPORT_HPP
#define SICVI_CLI_REPORT_HPP

#include <cstddef>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "sicvi/IndexResult.hpp"
#include "sicvi/properties.hpp"

/**
 * @file report.hpp
 * @brief Output document produced by every CLI invocation.
 */

namespace sicvi::cli {

struct IndexValue {
    std::string index;
    IndexResult value;

    friend bool operator==(const IndexValue&, const IndexValue&) = default;
};

struct FlagRow {
    std::string index;
    std::string variant;
    std::string flags;
    PropertyDetail detail;

    friend bool operator==(const FlagRow&, const FlagRow&) = default;
};

inline FlagRow make_flag_row(const PropertyFlags& f) {
    return FlagRow{ std::string(to_string(f.id)), std::string(to_string(f.variant)), flag_string(f), f.detail };
}

struct CurveRow {
    std::size_t level;
    std::size_t k;
    double distance;
    IndexResult si;

    friend bool operator==(const CurveRow&, const CurveRow&) = default;
};

/**
 * @brief Everything a command produced, in a stable order.
 *
 * Index results keep request order and curve rows keep level order.
 */
struct Report {
    std::string command;
    std::vector<std::string> arguments;

    std::optional<std::size_t> n;
    std::optional<std::size_t> dim;
    std::optional<std::size_t> k;

    std::vector<IndexValue> results;
    std::optional<std::vector<FlagRow> > flags;
    std::optional<std::vector<CurveRow> > curve;
    std::optional<IndexResult> si_hierarchical;
    std::optional<std::size_t> curve_minimum_level;
    std::vector<std::string> files;

    friend bool operator==(const Report&, const Report&) = default;
};

inline constexpr const char* undefined_token = "undefined";

inline nlohmann::ordered_json result_to_json(const IndexResult& r) {
    if (!r) {
        return undefined_token;
    }
    return r.value();
}

inline IndexResult result_from_json(const nlohmann::ordered_json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != undefined_token) {
            throw std::invalid_argument("unexpected token '" + j.get<std::string>() + "' for an index value");
        }
        return IndexResult::undefined();
    }
    return IndexResult(j.get<double>());
}

inline nlohmann::ordered_json to_json(const Report& r) {
    nlohmann::ordered_json out;
    out["command"] = r.command;
    out["arguments"] = r.arguments;

    nlohmann::ordered_json input = nlohmann::ordered_json::object();
    if (r.n) {
        input["n"] = *r.n;
    }
    if (r.dim) {
        input["dim"] = *r.dim;
    }
    if (r.k) {
        input["k"] = *r.k;
    }
    out["input"] = input;

    auto results = nlohmann::ordered_json::array();
    for (const auto& v : r.results) {
        results.push_back({ { "index", v.index }, { "value", result_to_json(v.value) } });
    }
    out["results"] = results;

    if (r.flags) {
        auto rows = nlohmann::ordered_json::array();
        for (const auto& f : *r.flags) {
            const auto& d = f.detail;
            rows.push_back({
                { "index", f.index },
                { "variant", f.variant },
                { "flags", f.flags },
                { "detail", {
                    { "scale_ok", d.scale_ok },
                    { "shift_ok", d.shift_ok },
                    { "is_best_at_y1", d.is_best_at_y1 },
                    { "y2_worse_than_y1", d.y2_worse_than_y1 },
                    { "baseline_at_x1", d.baseline_at_x1 },
                    { "baseline_at_xmax", d.baseline_at_xmax },
                    { "undefined_probes", d.undefined_probes },
                } },
            });
        }
        out["flags"] = rows;
    }

    if (r.curve) {
        auto rows = nlohmann::ordered_json::array();
        for (const auto& c : *r.curve) {
            rows.push_back({ { "level", c.level }, { "k", c.k }, { "distance", c.distance }, { "si", result_to_json(c.si) } });
        }
        out["curve"] = rows;
    }
    if (r.si_hierarchical) {
        out["si_hierarchical"] = result_to_json(*r.si_hierarchical);
    }
    if (r.curve_minimum_level) {
        out["curve_minimum_level"] = *r.curve_minimum_level;
    }
    if (!r.files.empty()) {
        out["files"] = r.files;
    }
    return out;
}

inline Report report_from_json(const nlohmann::ordered_json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.arguments = j.at("arguments").get<std::vector<std::string> >();

    const auto& input = j.at("input");
    if (input.contains("n")) {
        r.n = input["n"].get<std::size_t>();
    }
    if (input.contains("dim")) {
        r.dim = input["dim"].get<std::size_t>();
    }
    if (input.contains("k")) {
        r.k = input["k"].get<std::size_t>();
    }

    for (const auto& v : j.at("results")) {
        r.results.push_back(IndexValue{ v.at("index").get<std::string>(), result_from_json(v.at("value")) });
    }

    if (j.contains("flags")) {
        r.flags.emplace();
        for (const auto& f : j["flags"]) {
            const auto& d = f.at("detail");
            PropertyDetail detail;
            detail.scale_ok = d.at("scale_ok").get<bool>();
            detail.shift_ok = d.at("shift_ok").get<bool>();
            detail.is_best_at_y1 = d.at("is_best_at_y1").get<bool>();
            detail.y2_worse_than_y1 = d.at("y2_worse_than_y1").get<bool>();
            detail.baseline_at_x1 = d.at("baseline_at_x1").get<bool>();
            detail.baseline_at_xmax = d.at("baseline_at_xmax").get<bool>();
            detail.undefined_probes = d.at("undefined_probes").get<std::vector<std::string> >();
            r.flags->push_back(FlagRow{ f.at("index").get<std::string>(), f.at("variant").get<std::string>(), f.at("flags").get<std::string>(), detail });
        }
    }

    if (j.contains("curve")) {
        r.curve.emplace();
        for (const auto& c : j["curve"]) {
            r.curve->push_back(CurveRow{ c.at("level").get<std::size_t>(), c.at("k").get<std::size_t>(), c.at("distance").get<double>(), result_from_json(c.at("si")) });
        }
    }
    if (j.contains("si_hierarchical")) {
        r.si_hierarchical = result_from_json(j["si_hierarchical"]);
    }
    if (j.contains("curve_minimum_level")) {
        r.curve_minimum_level = j["curve_minimum_level"].get<std::size_t>();
    }
    if (j.contains("files")) {
        r.files = j["files"].get<std::vector<std::string> >();
    }
    return r;
}

inline std::string to_structured(const Report& r) {
    return to_json(r).dump(2) + "\n";
}

inline Report parse_structured(const std::string& text) {
    return report_from_json(nlohmann::ordered_json::parse(text));
}

/**
 * Human-readable rendering; numbers are rounded, so use the structured form for anything downstream.
 */
inline std::string to_table(const Report& r) {
    std::ostringstream out;
    out << r.command;
    for (const auto& a : r.arguments) {
        out << ' ' << a;
    }
    out << '\n';

    if (r.n || r.dim || r.k) {
        out << "input:";
        if (r.n) {
            out << " n=" << *r.n;
        }
        if (r.dim) {
            out << " dim=" << *r.dim;
        }
        if (r.k) {
            out << " k=" << *r.k;
        }
        out << '\n';
    }

    if (!r.results.empty()) {
        out << '\n' << std::left << std::setw(18) << "index" << "value\n";
        for (const auto& v : r.results) {
            out << std::left << std::setw(18) << v.index << to_string(v.value) << '\n';
        }
    }

    if (r.flags) {
        auto yn = [](bool b) { return b ? "y" : "n"; };
        out << '\n' << std::left << std::setw(14) << "index" << std::setw(9) << "variant" << std::setw(8) << "flags"
            << "scale shift best split x1 xmax  undefined\n";
        for (const auto& f : *r.flags) {
            const auto& d = f.detail;
            out << std::left << std::setw(14) << f.index << std::setw(9) << f.variant << std::setw(8) << f.flags
                << std::setw(6) << yn(d.scale_ok) << std::setw(6) << yn(d.shift_ok) << std::setw(5) << yn(d.is_best_at_y1)
                << std::setw(6) << yn(d.y2_worse_than_y1) << std::setw(3) << yn(d.baseline_at_x1) << std::setw(6) << yn(d.baseline_at_xmax);
            for (std::size_t i = 0; i < d.undefined_probes.size(); ++i) {
                out << (i ? "," : "") << d.undefined_probes[i];
            }
            out << '\n';
        }
    }

    if (r.curve) {
        out << '\n' << std::left << std::setw(7) << "level" << std::setw(6) << "k" << std::setw(16) << "distance" << "si\n";
        for (const auto& c : *r.curve) {
            std::ostringstream dist;
            dist << std::setprecision(10) << c.distance;
            out << std::left << std::setw(7) << c.level << std::setw(6) << c.k << std::setw(16) << dist.str() << to_string(c.si) << '\n';
        }
    }
    if (r.si_hierarchical) {
        out << "\nsi_hierarchical: " << to_string(*r.si_hierarchical) << '\n';
    }
    if (r.curve_minimum_level) {
        out << "curve minimum at level " << *r.curve_minimum_level << '\n';
    }
    for (const auto& f : r.files) {
        out << "wrote " << f << '\n';
    }
    return out.str();
}

}

#endif
