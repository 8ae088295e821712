#include <algorithm>

#include "json.hpp"

#include "gl3hc/verify.hpp"

namespace gl3hc {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json rational_or_null(const std::optional<Rational>& r)
{
    return r ? ordered_json(r->str()) : ordered_json(nullptr);
}

ordered_json case_to_json(const CaseResult& c)
{
    ordered_json sets = ordered_json::object();
    for (const auto& [name, values] : c.params) {
        ordered_json arr = ordered_json::array();
        for (const auto& v : values) {
            arr.push_back(v.str());
        }
        sets[name] = std::move(arr);
    }
    ordered_json params;
    params["q"] = rational_or_null(c.q);
    params["side"] = c.side ? ordered_json(std::string(1, side_char(*c.side))) : ordered_json(nullptr);
    params["sets"] = std::move(sets);

    ordered_json out;
    out["identity_id"] = c.identity_id;
    out["shape"] = c.shape;
    out["seed"] = c.seed;
    out["params"] = std::move(params);
    out["lhs"] = rational_or_null(c.lhs);
    out["rhs"] = rational_or_null(c.rhs);
    out["checks"] = c.checks;
    out["equal"] = c.equal;
    out["error"] = c.error.empty() ? ordered_json(nullptr) : ordered_json(c.error);
    out["elapsed_ms"] = c.elapsed_ms;
    return out;
}

bool fail_with(std::string* why, std::string message)
{
    if (why != nullptr) {
        *why = std::move(message);
    }
    return false;
}

bool is_rational_text(const json& v)
{
    if (!v.is_string()) {
        return false;
    }
    try {
        (void)Rational::parse(v.get<std::string>());
        return true;
    } catch (const ParseError&) {
        return false;
    }
}

} // namespace

std::string report_to_json(const Report& report, int indent)
{
    ordered_json config;
    config["a_max"] = report.options.a_max;
    config["b_max"] = report.options.b_max;
    config["trials"] = report.options.trials;
    config["seed"] = report.options.cfg.seed;
    config["q"] = rational_or_null(report.options.cfg.q);
    config["laurent_window"] = report.options.cfg.laurent_window;
    config["max_abs"] = report.options.cfg.max_abs;

    ordered_json cases = ordered_json::array();
    for (const auto& c : report.cases) {
        cases.push_back(case_to_json(c));
    }

    ordered_json root;
    root["suite"] = report.suite;
    root["config"] = std::move(config);
    root["cases"] = std::move(cases);
    root["summary"] = {{"pass", report.pass}, {"fail", report.fail}, {"error", report.error}};
    return root.dump(indent) + "\n";
}

bool validate_report_json(std::string_view text, std::string* why)
{
    const json root = json::parse(text, nullptr, false);
    if (root.is_discarded() || !root.is_object()) {
        return fail_with(why, "not a JSON object");
    }
    for (const char* key : {"suite", "config", "cases", "summary"}) {
        if (!root.contains(key)) {
            return fail_with(why, std::string("missing top-level key '") + key + "'");
        }
    }
    if (!root["suite"].is_string() || !is_suite(root["suite"].get<std::string>())) {
        return fail_with(why, "suite must name a known suite");
    }
    if (!root["config"].is_object() || !root["cases"].is_array() || !root["summary"].is_object()) {
        return fail_with(why, "config, cases and summary have the wrong types");
    }
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t error = 0;
    for (std::size_t i = 0; i < root["cases"].size(); ++i) {
        const json& c = root["cases"][i];
        const std::string where = "cases[" + std::to_string(i) + "]";
        for (const char* key : {"identity_id", "shape", "seed", "params", "lhs", "rhs", "equal", "error", "elapsed_ms"}) {
            if (!c.contains(key)) {
                return fail_with(why, where + " is missing '" + key + "'");
            }
        }
        if (!c["identity_id"].is_string() || !c["shape"].is_array() || !c["seed"].is_number_unsigned()
            || !c["params"].is_object() || !c["equal"].is_boolean() || !c["elapsed_ms"].is_number_integer()) {
            return fail_with(why, where + " has a field of the wrong type");
        }
        try {
            (void)find_identity(c["identity_id"].get<std::string>());
        } catch (const std::invalid_argument&) {
            return fail_with(why, where + " names an unknown identity");
        }
        for (const auto& dim : c["shape"]) {
            if (!dim.is_number_unsigned()) {
                return fail_with(why, where + ".shape must hold non-negative integers");
            }
        }
        for (const char* key : {"lhs", "rhs"}) {
            if (!c[key].is_null() && !is_rational_text(c[key])) {
                return fail_with(why, where + "." + key + " is not a rational");
            }
        }
        const json& params = c["params"];
        if (!params.contains("q") || !(params["q"].is_null() || is_rational_text(params["q"]))) {
            return fail_with(why, where + ".params.q is not a rational");
        }
        if (params.contains("sets")) {
            for (const auto& [name, values] : params["sets"].items()) {
                if (!values.is_array()
                    || !std::all_of(values.begin(), values.end(), [](const json& v) { return is_rational_text(v); })) {
                    return fail_with(why, where + ".params.sets." + name + " is not a list of rationals");
                }
            }
        }
        if (!c["error"].is_null()) {
            if (!c["error"].is_string()) {
                return fail_with(why, where + ".error must be null or a string");
            }
            ++error;
        } else if (c["equal"].get<bool>()) {
            ++pass;
        } else {
            ++fail;
        }
    }
    const json& summary = root["summary"];
    for (const char* key : {"pass", "fail", "error"}) {
        if (!summary.contains(key) || !summary[key].is_number_unsigned()) {
            return fail_with(why, std::string("summary.") + key + " must be a non-negative integer");
        }
    }
    if (summary["pass"].get<std::size_t>() != pass || summary["fail"].get<std::size_t>() != fail
        || summary["error"].get<std::size_t>() != error) {
        return fail_with(why, "summary counts do not match the case tallies");
    }
    return true;
}

} // namespace gl3hc
