#ifndef PIGOU_IO_HPP
#define PIGOU_IO_HPP

#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pigou/cooperation.hpp"
#include "pigou/format.hpp"
#include "pigou/sweep.hpp"

namespace pigou {

namespace detail {

// SAX handler that rejects duplicate keys inside any object. The DOM parser
// silently keeps one of the duplicates, so this runs first.
class DuplicateKeyCheck : public nlohmann::json::json_sax_t {
public:
    bool null() override { return true; }
    bool boolean(bool) override { return true; }
    bool number_integer(number_integer_t) override { return true; }
    bool number_unsigned(number_unsigned_t) override { return true; }
    bool number_float(number_float_t, const string_t&) override { return true; }
    bool string(string_t&) override { return true; }
    bool binary(binary_t&) override { return true; }
    bool start_object(std::size_t) override {
        scopes_.emplace_back();
        return true;
    }
    bool key(string_t& k) override {
        if (!scopes_.back().insert(k).second) {
            throw SchemaError("duplicate key \"" + k + "\"");
        }
        return true;
    }
    bool end_object() override {
        scopes_.pop_back();
        return true;
    }
    bool start_array(std::size_t) override { return true; }
    bool end_array() override { return true; }
    bool parse_error(std::size_t pos, const std::string&,
                     const nlohmann::json::exception& e) override {
        throw ParseError("malformed scenario document at byte " +
                         std::to_string(pos) + ": " + e.what());
    }

private:
    std::vector<std::set<std::string>> scopes_;
};

inline void require_only_keys(const nlohmann::json& obj, const char* where,
                              const std::set<std::string>& allowed) {
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key())) {
            throw SchemaError(std::string("unknown key \"") + item.key() +
                              "\" in " + where);
        }
    }
}

inline const nlohmann::json& require_key(const nlohmann::json& obj,
                                         const char* where, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw SchemaError(std::string("missing key \"") + key + "\" in " + where);
    }
    return *it;
}

inline std::string require_string(const nlohmann::json& obj, const char* where,
                                  const char* key) {
    const auto& v = require_key(obj, where, key);
    if (!v.is_string()) {
        throw SchemaError(std::string("key \"") + key + "\" in " + where +
                          " must be a string");
    }
    return v.get<std::string>();
}

inline double require_number(const nlohmann::json& obj, const char* where,
                             const char* key) {
    const auto& v = require_key(obj, where, key);
    if (!v.is_number()) {
        throw SchemaError(std::string("key \"") + key + "\" in " + where +
                          " must be a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        throw SchemaError(std::string("key \"") + key + "\" in " + where +
                          " must be finite");
    }
    return d;
}

inline Industry parse_industry(const std::string& s) {
    if (s == "pollution") return Industry::pollution;
    if (s == "agriculture") return Industry::agriculture;
    if (s == "energy") return Industry::energy;
    if (s == "custom") return Industry::custom;
    throw SchemaError("industry \"" + s +
                      "\" is not one of pollution, agriculture, energy, custom");
}

inline void append_json_string(std::string& out, const std::string& s) {
    out += '"';
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

}  // namespace detail

/// Parses and validates a scenario document. The schema is strict: unknown
/// or duplicate keys are errors, and exactly one of parameters.c or a
/// calibration block must be present. When calibration is given, c is
/// derived from the efficiency ratio.
inline ExternalityScenario load_scenario(const std::string& document) {
    detail::DuplicateKeyCheck check;
    nlohmann::json::sax_parse(document, &check);

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed scenario document: ") + e.what());
    }
    if (!doc.is_object()) {
        throw SchemaError("scenario document must be a JSON object");
    }
    detail::require_only_keys(doc, "document",
                              {"name", "industry", "units", "parameters",
                               "calibration", "notes"});

    ScenarioMeta meta;
    meta.name = detail::require_string(doc, "document", "name");
    meta.industry =
        detail::parse_industry(detail::require_string(doc, "document", "industry"));

    const auto& units = detail::require_key(doc, "document", "units");
    if (!units.is_object()) throw SchemaError("key \"units\" must be an object");
    detail::require_only_keys(units, "units", {"activity", "currency"});
    meta.activity_unit = detail::require_string(units, "units", "activity");
    meta.currency_unit = detail::require_string(units, "units", "currency");

    if (auto it = doc.find("notes"); it != doc.end()) {
        if (!it->is_string()) throw SchemaError("key \"notes\" must be a string");
        meta.notes = it->get<std::string>();
    }

    const auto& params = detail::require_key(doc, "document", "parameters");
    if (!params.is_object()) {
        throw SchemaError("key \"parameters\" must be an object");
    }
    detail::require_only_keys(params, "parameters", {"a", "b", "c", "y1"});
    const double a = detail::require_number(params, "parameters", "a");
    const double b = detail::require_number(params, "parameters", "b");
    const double y1 = detail::require_number(params, "parameters", "y1");

    const bool has_c = params.contains("c");
    const bool has_calibration = doc.contains("calibration");
    if (has_c && has_calibration) {
        throw CalibrationConflict(
            "scenario supplies both parameters.c and a calibration block");
    }
    if (!has_c && !has_calibration) {
        throw SchemaError(
            "exactly one of parameters.c or calibration must be present");
    }

    double c = 0.0;
    if (has_c) {
        c = detail::require_number(params, "parameters", "c");
    } else {
        const auto& cal = doc.at("calibration");
        if (!cal.is_object()) {
            throw SchemaError("key \"calibration\" must be an object");
        }
        detail::require_only_keys(cal, "calibration",
                                  {"energy_before", "energy_after"});
        const double before =
            detail::require_number(cal, "calibration", "energy_before");
        const double after =
            detail::require_number(cal, "calibration", "energy_after");
        try {
            c = slope_from_efficiency(a, before, after);
        } catch (const NoImprovement& e) {
            throw ConstraintViolation("energy_after >= energy_before", e.what());
        }
    }
    return validate(a, b, c, y1, std::move(meta));
}

/// Re-renders a scenario in the scenario-file schema (always with an
/// explicit c). The output parses back through load_scenario.
inline std::string write_scenario(const ExternalityScenario& s,
                                  const std::string& indent = "") {
    const std::string pad = indent + "  ";
    std::string out = "{\n";
    const auto field = [&](const char* key, const std::string& rendered,
                           bool last = false) {
        out += pad;
        detail::append_json_string(out, key);
        out += ": " + rendered + (last ? "\n" : ",\n");
    };
    std::string str;
    const auto quoted = [&](const std::string& v) {
        str.clear();
        detail::append_json_string(str, v);
        return str;
    };
    field("name", quoted(s.meta().name));
    field("industry", quoted(std::string(to_string(s.meta().industry))));
    field("units", "{ \"activity\": " + quoted(s.meta().activity_unit) +
                       ", \"currency\": " + quoted(s.meta().currency_unit) + " }");
    field("parameters",
          "{ \"a\": " + format_number(s.a()) + ", \"b\": " + format_number(s.b()) +
              ", \"c\": " + format_number(s.c()) +
              ", \"y1\": " + format_number(s.y1()) + " }");
    field("notes", quoted(s.meta().notes), true);
    out += indent + "}";
    return out;
}

/// Renders a comparison report as a results document: scenario echo, mode,
/// per-regime equilibria and welfare, deltas, verdicts. Key order is fixed
/// and numbers carry 12 significant digits, so output is byte-deterministic.
inline std::string write_results(const ComparisonReport& report) {
    std::string out = "{\n  \"scenario\": ";
    out += write_scenario(report.scenario, "  ");
    out += ",\n  \"mode\": \"";
    out += to_string(report.mode);
    out += "\",\n";
    const auto regime_block = [&](const char* key, const RegimeOutcome& o) {
        out += std::string("  \"") + key + "\": {\n";
        out += "    \"x_private\": " + format_number(o.equilibrium.x_private) + ",\n";
        out += "    \"x_social\": " + format_number(o.equilibrium.x_social) + ",\n";
        out += "    \"y_private\": " + format_number(o.equilibrium.y_private) + ",\n";
        out += "    \"y_social\": " + format_number(o.equilibrium.y_social) + ",\n";
        out += "    \"tau\": " + format_number(o.welfare.tau) + ",\n";
        out += "    \"alpha\": " + format_number(o.welfare.alpha) + ",\n";
        out += "    \"evaluation_x\": " + format_number(o.welfare.evaluation_x) +
               "\n  },\n";
    };
    regime_block("noncooperative", report.noncoop);
    regime_block("cooperative", report.coop);
    out += "  \"deltas\": {\n";
    out += "    \"tau\": " + format_number(report.delta_tau) + ",\n";
    out += "    \"alpha\": " + format_number(report.delta_alpha) + ",\n";
    out += "    \"x_social\": " + format_number(report.delta_x_social) + "\n  },\n";
    out += "  \"verdicts\": {\n";
    const auto flag = [](bool v) { return v ? "true" : "false"; };
    out += std::string("    \"tau_reduced\": ") + flag(report.verdicts.tau_reduced) +
           ",\n";
    out += std::string("    \"alpha_reduced\": ") +
           flag(report.verdicts.alpha_reduced) + ",\n";
    out += std::string("    \"equilibrium_lowered\": ") +
           flag(report.verdicts.equilibrium_lowered) + "\n  }\n}\n";
    return out;
}

/// Samples the four curves on [0, 1.1 * x_private(noncoop)] as CSV. One
/// header row plus `samples` data rows, values at 12 significant digits.
inline std::string emit_points(const ComparisonReport& report, long samples) {
    if (samples < 2) throw std::invalid_argument("emit_points requires samples >= 2");
    const ExternalityScenario& s = report.scenario;
    const CurveSet nc = curves(s, Regime::noncooperative);
    const CurveSet co = curves(s, Regime::cooperative);
    const double x_max = 1.1 * report.noncoop.equilibrium.x_private;
    std::string out = "x,MPC,MSC,MSB_noncoop,MSB_coop\n";
    for (long i = 0; i < samples; ++i) {
        const double x = x_max * static_cast<double>(i) / static_cast<double>(samples - 1);
        out += format_number(x) + "," + format_number(nc.mpc.value(x)) + "," +
               format_number(nc.msc.value(x)) + "," + format_number(nc.msb.value(x)) +
               "," + format_number(co.msb.value(x)) + "\n";
    }
    return out;
}

/// Renders a sweep series as a deterministic JSON document.
inline std::string write_sweep(const SweepSeries& series) {
    std::string out = "{\n  \"parameter\": \"";
    out += to_string(series.parameter);
    out += "\",\n  \"mode\": \"";
    out += to_string(series.mode);
    out += "\",\n  \"grid_size\": " + std::to_string(series.grid.size());
    out += ",\n  \"evaluated\": [";
    for (std::size_t i = 0; i < series.evaluated.size(); ++i) {
        const SweepPoint& p = series.evaluated[i];
        out += i == 0 ? "\n" : ",\n";
        out += "    { \"value\": " + format_number(p.value) +
               ", \"tau1\": " + format_number(p.tau1) +
               ", \"tau2\": " + format_number(p.tau2) +
               ", \"alpha1\": " + format_number(p.alpha1) +
               ", \"alpha2\": " + format_number(p.alpha2) +
               ", \"x_social_noncoop\": " + format_number(p.x_social_noncoop) +
               ", \"x_social_coop\": " + format_number(p.x_social_coop) + " }";
    }
    out += series.evaluated.empty() ? "],\n" : "\n  ],\n";
    out += "  \"skipped\": [";
    for (std::size_t i = 0; i < series.skipped.size(); ++i) {
        const SkippedPoint& p = series.skipped[i];
        out += i == 0 ? "\n" : ",\n";
        out += "    { \"value\": " + format_number(p.value) + ", \"reason\": ";
        detail::append_json_string(out, p.reason);
        out += " }";
    }
    out += series.skipped.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

}  // namespace pigou

#endif
