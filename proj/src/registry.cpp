#include "ergopt/registry.hpp"

#include <fstream>
#include <set>
#include <vector>

namespace ergopt {

namespace {

void reject_unknown(const Json& j, const std::set<std::string>& known, const std::string& where) {
    if (!j.is_object()) throw config_error(where + " must be a JSON object");
    for (const auto& [key, _] : j.items()) {
        if (!known.count(key)) {
            throw config_error("unknown key '" + key + "' in " + where);
        }
    }
}

std::int64_t int_field(const Json& v, const std::string& what) {
    if (!v.is_number_integer()) throw config_error(what + " must be an integer");
    return v.get<std::int64_t>();
}

} // namespace

Rational rational_field(const Json& v, const std::string& what) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw config_error(what + " must be an integer or a \"p/q\" string");
}

TransitionSystem make_shift(const Json& spec) {
    reject_unknown(spec, {"family", "width", "path", "tail"}, "shift");
    if (!spec.contains("family")) throw config_error("shift needs a family");
    std::string family = spec.at("family").get<std::string>();
    if (family == "full") return TransitionSystem(FullShift{});
    if (family == "renewal") return TransitionSystem(RenewalShift{});
    if (family == "band") {
        if (!spec.contains("width")) throw config_error("band shift needs width");
        return TransitionSystem(BandShift{int_field(spec.at("width"), "band width")});
    }
    if (family.rfind("band:", 0) == 0) { // "band:b" shorthand
        return TransitionSystem(BandShift{std::stoll(family.substr(5))});
    }
    if (family == "adjacency-file") {
        if (!spec.contains("path") || !spec.contains("tail")) {
            throw config_error("adjacency-file shift needs path and tail");
        }
        std::ifstream in(spec.at("path").get<std::string>());
        if (!in) {
            throw config_error("cannot open adjacency file '" +
                               spec.at("path").get<std::string>() + "'");
        }
        FileShift fs;
        fs.support_max = 0;
        Symbol a = 0, b = 0;
        while (in >> a >> b) {
            fs.edges.insert({a, b});
            fs.support_max = std::max({fs.support_max, a, b});
        }
        std::string tail = spec.at("tail").get<std::string>();
        if (tail == "full") {
            fs.tail = FullShift{};
        } else if (tail == "renewal") {
            fs.tail = RenewalShift{};
        } else if (tail.rfind("band:", 0) == 0) {
            fs.tail = BandShift{std::stoll(tail.substr(5))};
        } else {
            throw config_error("unknown adjacency-file tail '" + tail + "'");
        }
        return TransitionSystem(std::move(fs));
    }
    throw config_error("unknown shift family '" + family + "'");
}

Potential make_potential(const Json& spec) {
    reject_unknown(spec, {"family", "a", "cap", "c", "values", "tail"}, "potential");
    if (!spec.contains("family")) throw config_error("potential needs a family");
    std::string family = spec.at("family").get<std::string>();
    if (family == "linear") {
        if (!spec.contains("a")) throw config_error("linear potential needs a");
        return Potential(LinearPotential{rational_field(spec.at("a"), "a")});
    }
    if (family == "capped-diff") {
        if (!spec.contains("a") || !spec.contains("cap")) {
            throw config_error("capped-diff potential needs a and cap");
        }
        return Potential(CappedDiffPotential{rational_field(spec.at("a"), "a"),
                                             rational_field(spec.at("cap"), "cap")});
    }
    if (family == "constant") {
        if (!spec.contains("c")) throw config_error("constant potential needs c");
        return Potential(ConstantPotential{rational_field(spec.at("c"), "c")});
    }
    if (family == "table") {
        if (!spec.contains("values") || !spec.contains("tail")) {
            throw config_error("table potential needs values and tail");
        }
        TablePotential t;
        for (const auto& [key, value] : spec.at("values").items()) {
            t.values[std::stoll(key)] = rational_field(value, "table value");
        }
        const Json& tail = spec.at("tail");
        reject_unknown(tail, {"intercept", "slope"}, "potential tail");
        t.tail_intercept = rational_field(tail.at("intercept"), "tail intercept");
        t.tail_slope = rational_field(tail.at("slope"), "tail slope");
        return Potential(std::move(t));
    }
    throw config_error("unknown potential family '" + family + "'");
}

RealPotential make_real_potential(const Json& spec) {
    reject_unknown(spec, {"family", "a", "center", "c"}, "real potential");
    if (!spec.contains("family")) throw config_error("real potential needs a family");
    std::string family = spec.at("family").get<std::string>();
    if (family == "abs-linear") {
        return RealPotential(AbsLinearReal{rational_field(spec.at("a"), "a"),
                                           rational_field(spec.at("center"), "center")});
    }
    if (family == "linear") {
        return RealPotential(LinearReal{rational_field(spec.at("a"), "a")});
    }
    if (family == "constant") {
        return RealPotential(ConstantReal{rational_field(spec.at("c"), "c")});
    }
    throw config_error("unknown real potential family '" + family + "'");
}

RunConfig parse_config(const Json& j) {
    reject_unknown(j,
                   {"schema", "shift", "potential", "epsilon", "mode", "budgets", "seed", "output",
                    "thresholds", "refine", "real", "debug_inject"},
                   "config");
    RunConfig cfg;
    if (j.contains("schema") && int_field(j.at("schema"), "schema") != 1) {
        throw config_error("unsupported config schema");
    }
    if (j.contains("shift")) cfg.shift_spec = j.at("shift");
    if (j.contains("potential")) cfg.potential_spec = j.at("potential");
    if (j.contains("epsilon")) cfg.epsilon = rational_field(j.at("epsilon"), "epsilon");
    if (j.contains("mode")) {
        std::string m = j.at("mode").get<std::string>();
        if (m == "rational") {
            cfg.mode = Mode::rational;
        } else if (m == "float") {
            cfg.mode = Mode::floating;
        } else {
            throw config_error("mode must be 'rational' or 'float'");
        }
    }
    if (j.contains("budgets")) {
        const Json& b = j.at("budgets");
        reject_unknown(b,
                       {"connect_ceiling", "connect_length", "truncation", "cases", "max_period",
                        "symbol_slack", "log_cases"},
                       "budgets");
        if (b.contains("connect_ceiling")) {
            cfg.budgets.connect_ceiling = int_field(b.at("connect_ceiling"), "connect_ceiling");
        }
        if (b.contains("connect_length")) {
            cfg.budgets.connect_length =
                static_cast<int>(int_field(b.at("connect_length"), "connect_length"));
        }
        if (b.contains("truncation")) {
            cfg.budgets.truncation = int_field(b.at("truncation"), "truncation");
        }
        if (b.contains("cases")) {
            cfg.budgets.cases = static_cast<int>(int_field(b.at("cases"), "cases"));
        }
        if (b.contains("max_period")) {
            cfg.budgets.max_period = static_cast<int>(int_field(b.at("max_period"), "max_period"));
        }
        if (b.contains("symbol_slack")) {
            cfg.budgets.symbol_slack = int_field(b.at("symbol_slack"), "symbol_slack");
        }
        if (b.contains("log_cases")) {
            cfg.budgets.log_cases = static_cast<int>(int_field(b.at("log_cases"), "log_cases"));
        }
        for (const auto& [_, limit] :
             std::vector<std::pair<const char*, std::int64_t>>{
                 {"connect_ceiling", cfg.budgets.connect_ceiling},
                 {"connect_length", cfg.budgets.connect_length},
                 {"truncation", cfg.budgets.truncation},
                 {"max_period", cfg.budgets.max_period}}) {
            if (limit < 1) throw config_error("budgets must be positive");
        }
        if (cfg.budgets.cases < 0 || cfg.budgets.symbol_slack < 0 || cfg.budgets.log_cases < 0) {
            throw config_error("budgets must be non-negative");
        }
    }
    if (j.contains("seed")) cfg.seed = static_cast<std::uint64_t>(int_field(j.at("seed"), "seed"));
    if (j.contains("output")) cfg.output = j.at("output").get<std::string>();
    if (j.contains("thresholds")) {
        const Json& t = j.at("thresholds");
        reject_unknown(t, {"cut1", "cut2"}, "thresholds");
        if (t.contains("cut1")) cfg.cut1 = int_field(t.at("cut1"), "cut1");
        if (t.contains("cut2")) cfg.cut2 = int_field(t.at("cut2"), "cut2");
    }
    if (j.contains("refine")) {
        if (!j.at("refine").is_boolean()) throw config_error("refine must be a boolean");
        cfg.refine = j.at("refine").get<bool>();
    }
    if (j.contains("real")) {
        const Json& r = j.at("real");
        reject_unknown(r, {"potential", "epsilon", "beta_lb", "top", "grid_n"}, "real");
        if (r.contains("potential")) cfg.real_potential_spec = r.at("potential");
        if (r.contains("epsilon")) cfg.real_epsilon = rational_field(r.at("epsilon"), "real epsilon");
        if (r.contains("beta_lb")) cfg.real_beta_lb = rational_field(r.at("beta_lb"), "real beta_lb");
        if (r.contains("top")) cfg.real_top = rational_field(r.at("top"), "real top");
        if (r.contains("grid_n")) cfg.grid_n = static_cast<int>(int_field(r.at("grid_n"), "grid_n"));
    }
    if (j.contains("debug_inject")) {
        for (const auto& [key, value] : j.at("debug_inject").items()) {
            cfg.debug_inject[key] = value.get<std::string>();
        }
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw config_error("config parse failure: " + std::string(e.what()));
    }
    return parse_config(j);
}

} // namespace ergopt
