#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "rdtm/parse.hpp"
#include "rdtm/report.hpp"

namespace rdtm {

using nlohmann::json;

namespace {

double number(const json& j, const std::string& field)
{
    if (!j.is_number()) throw DescriptorError(field, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw DescriptorError(field, "must be finite");
    return v;
}

int integer(const json& j, const std::string& field)
{
    if (!j.is_number_integer()) throw DescriptorError(field, "expected an integer");
    return j.get<int>();
}

std::vector<double> number_list(const json& j, const std::string& field)
{
    if (!j.is_array()) throw DescriptorError(field, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where)
{
    for (const auto& [key, value] : obj.items()) {
        if (!known.count(key)) throw DescriptorError(where.empty() ? key : where + "." + key, "unknown field");
    }
}

PdeModel parse_model(const json& j)
{
    if (!j.is_object()) throw DescriptorError("model", "expected an object");
    reject_unknown(j, {"linear", "nonlinear"}, "model");
    PdeModel m;
    if (j.contains("linear")) {
        const json& lin = j["linear"];
        if (!lin.is_array()) throw DescriptorError("model.linear", "expected an array");
        for (std::size_t i = 0; i < lin.size(); ++i) {
            const std::string f = "model.linear[" + std::to_string(i) + "]";
            if (!lin[i].is_object()) throw DescriptorError(f, "expected an object");
            reject_unknown(lin[i], {"coefficient", "order"}, f);
            if (!lin[i].contains("order")) throw DescriptorError(f + ".order", "missing");
            m.linear.push_back({lin[i].contains("coefficient") ? number(lin[i]["coefficient"], f + ".coefficient") : 1.0,
                                integer(lin[i]["order"], f + ".order")});
        }
    }
    if (j.contains("nonlinear")) {
        const json& non = j["nonlinear"];
        if (!non.is_array()) throw DescriptorError("model.nonlinear", "expected an array");
        for (std::size_t i = 0; i < non.size(); ++i) {
            const std::string f = "model.nonlinear[" + std::to_string(i) + "]";
            if (!non[i].is_object()) throw DescriptorError(f, "expected an object");
            reject_unknown(non[i], {"coefficient", "power", "order"}, f);
            if (!non[i].contains("order")) throw DescriptorError(f + ".order", "missing");
            NonlinearTerm t;
            t.coefficient = non[i].contains("coefficient") ? number(non[i]["coefficient"], f + ".coefficient") : 1.0;
            t.power = non[i].contains("power") ? integer(non[i]["power"], f + ".power") : 1;
            t.derivative_order = integer(non[i]["order"], f + ".order");
            m.nonlinear.push_back(t);
        }
    }
    return m;
}

}  // namespace

ProblemDescriptor ProblemDescriptor::from_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DescriptorError("", std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw DescriptorError("", "descriptor must be a JSON object");
    reject_unknown(j, {"preset", "coefficients", "model", "initial", "params", "order", "grid"}, "");

    ProblemDescriptor d;
    if (j.contains("preset")) {
        if (!j["preset"].is_string()) throw DescriptorError("preset", "expected a string");
        d.preset = j["preset"].get<std::string>();
    }
    if (j.contains("coefficients")) {
        if (!j["coefficients"].is_object()) throw DescriptorError("coefficients", "expected an object");
        for (const auto& [k, v] : j["coefficients"].items()) d.coefficients[k] = number(v, "coefficients." + k);
    }
    if (j.contains("model")) d.model = parse_model(j["model"]);
    if (j.contains("initial")) {
        if (!j["initial"].is_string()) throw DescriptorError("initial", "expected expression text");
        d.initial = j["initial"].get<std::string>();
    }
    if (j.contains("params")) {
        if (!j["params"].is_object()) throw DescriptorError("params", "expected an object");
        for (const auto& [k, v] : j["params"].items()) {
            if (k == "kappa" && v.is_string()) {
                if (v.get<std::string>() != "auto") throw DescriptorError("params.kappa", "expected a number or \"auto\"");
                d.params[k] = default_kappa();
            } else {
                d.params[k] = number(v, "params." + k);
            }
        }
    }
    if (j.contains("order")) d.order = integer(j["order"], "order");
    if (j.contains("grid")) {
        const json& g = j["grid"];
        if (!g.is_object()) throw DescriptorError("grid", "expected an object");
        reject_unknown(g, {"xs", "ts", "xmin", "xmax", "nx", "tmin", "tmax", "nt"}, "grid");
        if (g.contains("xs")) d.xs = number_list(g["xs"], "grid.xs");
        if (g.contains("ts")) d.ts = number_list(g["ts"], "grid.ts");
        auto range = [&](const char* lo, const char* hi, const char* n) -> std::optional<GridRange> {
            if (!g.contains(lo) && !g.contains(hi) && !g.contains(n)) return std::nullopt;
            for (const char* key : {lo, hi, n}) {
                if (!g.contains(key)) throw DescriptorError(std::string("grid.") + key, "missing (ranges need min, max and count)");
            }
            return GridRange{number(g[lo], std::string("grid.") + lo), number(g[hi], std::string("grid.") + hi),
                             integer(g[n], std::string("grid.") + n)};
        };
        d.x_range = range("xmin", "xmax", "nx");
        d.t_range = range("tmin", "tmax", "nt");
    }
    return d;
}

ProblemDescriptor ProblemDescriptor::from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DescriptorError("", "cannot read problem file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

std::vector<double> GridRange::points() const
{
    if (count < 1) throw DescriptorError("grid", "point count must be positive");
    if (count == 1) return {min};
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(min + (max - min) * i / (count - 1));
    return out;
}

std::vector<double> default_xs(Command command)
{
    switch (command) {
    case Command::Table: return {0.0, 0.5, 1.0};
    case Command::Coefficients: return {0.0};
    default: return GridRange{-40.0, 40.0, 201}.points();
    }
}

std::vector<double> default_ts(Command command)
{
    switch (command) {
    case Command::Table: return {0.0, 0.5, 1.0};
    case Command::Coefficients: return {0.0};
    case Command::Convergence: {
        std::vector<double> ts;
        for (double t : GridRange{0.0, 4.0, 101}.points()) {
            if (t <= 0.5) ts.push_back(t);
        }
        return ts;
    }
    default: return GridRange{0.0, 4.0, 101}.points();
    }
}

PdeModel preset_model(const std::string& name, const std::map<std::string, double>& coefficients)
{
    auto get = [&](const char* key, double fallback) {
        auto it = coefficients.find(key);
        return it == coefficients.end() ? fallback : it->second;
    };
    auto nonneg_int = [&](const char* key, double fallback) {
        const double v = get(key, fallback);
        if (v < 0 || v != std::trunc(v)) throw DescriptorError(std::string("coefficients.") + key, "must be a nonnegative integer");
        return static_cast<int>(v);
    };
    std::set<std::string> allowed;
    PdeModel m;
    if (name == "ks") {
        allowed = {"gamma", "lambda"};
        m = ks_model(get("gamma", 1.0), get("lambda", 1.0));
    } else if (name == "ks-printed") {
        allowed = {"gamma", "lambda"};
        m = ks_printed_model(get("gamma", 1.0), get("lambda", 1.0));
    } else if (name == "generalized-ks") {
        allowed = {"alpha", "beta", "gamma", "tau", "lambda"};
        m = generalized_model(get("alpha", 1.0), nonneg_int("beta", 1.0), get("gamma", 1.0), nonneg_int("tau", 0.0),
                              get("lambda", 1.0));
    } else {
        throw DescriptorError("preset", "unknown preset '" + name + "' (expected ks, ks-printed or generalized-ks)");
    }
    for (const auto& [k, v] : coefficients) {
        if (!allowed.count(k)) throw DescriptorError("coefficients." + k, "not used by preset '" + name + "'");
    }
    return m;
}

bool Problem::has_exact() const { return builtin_initial && (preset == "ks" || preset == "ks-printed"); }

Problem resolve(const ProblemDescriptor& d, Command command)
{
    Problem p;
    if (d.model) {
        p.preset = "custom";
        p.model = *d.model;
    } else {
        p.preset = d.preset.value_or("ks");
        p.model = preset_model(p.preset, d.coefficients);
    }
    try {
        p.model.validate();
    } catch (const EngineError& e) {
        throw DescriptorError("model", e.what());
    }

    if (d.initial) {
        try {
            p.initial = parse(*d.initial);
        } catch (const ParseError& e) {
            throw DescriptorError("initial", e.what());
        }
        p.builtin_initial = false;
    } else {
        p.initial = ks_initial();
    }

    auto param = [&](const char* key, double fallback) {
        auto it = d.params.find(key);
        return it == d.params.end() ? fallback : it->second;
    };
    const KsParams defaults;
    p.params = KsParams{param("c", defaults.c), param("kappa", defaults.kappa), param("x0", defaults.x0)};
    try {
        p.params.validate();
    } catch (const std::invalid_argument& e) {
        throw DescriptorError("params", e.what());
    }
    p.bindings = p.params.bindings();
    for (const auto& [k, v] : d.params) p.bindings.set(k, v);
    for (const auto& name : named_constants(p.initial)) {
        if (!p.bindings.constants.count(name)) throw DescriptorError("params." + name, "unbound named constant in initial condition");
    }

    p.order = d.order.value_or(kDefaultSeriesOrder);
    if (p.order < 0 || p.order > kMaxSeriesOrder)
        throw DescriptorError("order", "must be between 0 and " + std::to_string(kMaxSeriesOrder));

    p.xs = d.xs ? *d.xs : d.x_range ? d.x_range->points() : default_xs(command);
    p.ts = d.ts ? *d.ts : d.t_range ? d.t_range->points() : default_ts(command);
    if (p.xs.empty()) throw DescriptorError("grid.xs", "grid must be nonempty");
    if (p.ts.empty()) throw DescriptorError("grid.ts", "grid must be nonempty");
    for (double v : p.xs) {
        if (!std::isfinite(v)) throw DescriptorError("grid.xs", "must be finite");
    }
    for (double v : p.ts) {
        if (!std::isfinite(v)) throw DescriptorError("grid.ts", "must be finite");
    }

    if (command != Command::Coefficients && !p.has_exact()) {
        throw DescriptorError("preset", "no exact solution for preset '" + p.preset +
                                            "' with this initial condition; only ks and ks-printed with the built-in "
                                            "initial condition can be compared");
    }
    return p;
}

}  // namespace rdtm
