#pragma once

#include "ergopt/real_shift.hpp"
#include "ergopt/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace ergopt {

struct Budgets {
    Symbol connect_ceiling = 4096;
    int connect_length = 4096;
    Symbol truncation = 4096;
    int cases = 1000;      // generated cases per verified property
    int max_period = 28;   // generator period bound
    Symbol symbol_slack = 5; // generator symbols reach cut2 + slack
    int log_cases = 0;     // sample rows kept in verify reports
};

// Everything a run needs, parsed fail-closed: unknown keys anywhere in the
// config are rejected so threshold typos cannot silently change a run.
struct RunConfig {
    std::optional<Json> shift_spec;
    std::optional<Json> potential_spec;
    std::optional<Rational> epsilon;
    Mode mode = Mode::rational;
    Budgets budgets;
    std::uint64_t seed = 1;
    std::string output;
    std::optional<Symbol> cut1;
    std::optional<Symbol> cut2;
    bool refine = false;
    std::map<std::string, std::string> debug_inject;

    // real-shift section
    std::optional<Json> real_potential_spec;
    std::optional<Rational> real_epsilon;
    std::optional<Rational> real_beta_lb;
    std::optional<Rational> real_top;
    int grid_n = 5;
};

RunConfig parse_config(const Json& j);
RunConfig load_config(const std::string& path);

TransitionSystem make_shift(const Json& spec);
Potential make_potential(const Json& spec);
RealPotential make_real_potential(const Json& spec);

Rational rational_field(const Json& v, const std::string& what);

} // namespace ergopt
