#include "ergopt/oracle.hpp"
#include "ergopt/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace ergopt;

// exit codes are the machine contract: 0 ok, 1 property failure,
// 2 certification, 3 construction, 4 budget, 64 bad config/usage
constexpr int kExitProperty = 1;
constexpr int kExitCertification = 2;
constexpr int kExitConstruction = 3;
constexpr int kExitBudget = 4;
constexpr int kExitUsage = 64;

struct CliOptions {
    std::string config_path;
    std::string mode_override;
    std::string out_override;
    std::string dot_path;
    std::vector<std::string> injects;
    std::optional<std::uint64_t> seed_override;
};

RunConfig effective_config(const CliOptions& opt) {
    RunConfig cfg = load_config(opt.config_path);
    if (!opt.mode_override.empty()) {
        if (opt.mode_override == "rational") {
            cfg.mode = Mode::rational;
        } else if (opt.mode_override == "float") {
            cfg.mode = Mode::floating;
        } else {
            throw config_error("--mode must be rational or float");
        }
    }
    if (opt.seed_override) cfg.seed = *opt.seed_override;
    if (!opt.out_override.empty()) cfg.output = opt.out_override;
    for (const std::string& kv : opt.injects) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw config_error("--debug-inject expects key=value");
        cfg.debug_inject[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return cfg;
}

void emit(const Json& report, const RunConfig& cfg) {
    if (cfg.output.empty()) {
        std::cout << dump_report(report);
    } else {
        write_report(report, cfg.output);
        std::cerr << "report written to " << cfg.output << "\n";
    }
}

ReducePolicy policy_from(const RunConfig& cfg) {
    ReducePolicy policy;
    policy.connect = ConnectPolicy{cfg.budgets.connect_ceiling, cfg.budgets.connect_length};
    policy.truncation_limit = cfg.budgets.truncation;
    policy.user_cut1 = cfg.cut1;
    policy.user_cut2 = cfg.cut2;
    policy.refine = cfg.refine;
    return policy;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw config_error("config is missing " + what);
}

template <class S>
int do_solve(const RunConfig& cfg, const std::string& dot_path) {
    Potential p = make_potential(*cfg.potential_spec);
    TransitionSystem ts = make_shift(*cfg.shift_spec);
    Solution<S> sol = solve<S>(p, ts, *cfg.epsilon, policy_from(cfg));
    if (!dot_path.empty()) {
        FiniteGraph g = restrict_to(ts, sol.reduction.hull2.symbols);
        WeightedGraph wg = lift(g, p);
        auto best = max_mean_cycle<S>(wg);
        std::ofstream dot(dot_path);
        if (!dot) throw config_error("cannot open dot path '" + dot_path + "'");
        dot << to_dot(wg, best ? best->cycle : std::vector<int>{});
    }
    emit(solution_json(sol), cfg);
    return 0;
}

template <class S>
int do_reduce(const RunConfig& cfg) {
    Potential p = make_potential(*cfg.potential_spec);
    TransitionSystem ts = make_shift(*cfg.shift_spec);
    Reduction<S> red = reduce<S>(p, ts, *cfg.epsilon, policy_from(cfg));
    emit(reduction_json(red), cfg);
    return 0;
}

int dispatch(const std::string& cmd, const CliOptions& opt) {
    RunConfig cfg = effective_config(opt);
    if (cmd == "solve" || cmd == "reduce") {
        require(cfg.shift_spec.has_value(), "shift");
        require(cfg.potential_spec.has_value(), "potential");
        require(cfg.epsilon.has_value(), "epsilon");
        if (cmd == "solve") {
            return cfg.mode == Mode::rational ? do_solve<Rational>(cfg, opt.dot_path)
                                              : do_solve<double>(cfg, opt.dot_path);
        }
        return cfg.mode == Mode::rational ? do_reduce<Rational>(cfg) : do_reduce<double>(cfg);
    }
    if (cmd == "reduce-real") {
        require(cfg.real_potential_spec.has_value(), "real.potential");
        require(cfg.real_epsilon.has_value(), "real.epsilon");
        require(cfg.real_beta_lb.has_value(), "real.beta_lb");
        RealPotential p = make_real_potential(*cfg.real_potential_spec);
        emit(real_reduction_json(reduce_real(p, *cfg.real_epsilon, *cfg.real_beta_lb)), cfg);
        return 0;
    }
    if (cmd == "grid-solve") {
        require(cfg.real_potential_spec.has_value(), "real.potential");
        require(cfg.real_top.has_value(), "real.top");
        RealPotential p = make_real_potential(*cfg.real_potential_spec);
        emit(grid_result_json(grid_solve(p, *cfg.real_top, cfg.grid_n)), cfg);
        return 0;
    }
    if (cmd == "verify") {
        require(cfg.shift_spec.has_value(), "shift");
        require(cfg.potential_spec.has_value(), "potential");
        require(cfg.epsilon.has_value(), "epsilon");
        if (cfg.mode != Mode::rational) {
            std::cerr << "note: property campaigns always run in exact arithmetic\n";
        }
        Potential p = make_potential(*cfg.potential_spec);
        TransitionSystem ts = make_shift(*cfg.shift_spec);
        VerifyOutcome outcome =
            run_verify(p, ts, *cfg.epsilon, cfg.budgets, cfg.seed, cfg.debug_inject);
        emit(outcome.report, cfg);
        return outcome.ok ? 0 : kExitProperty;
    }
    if (cmd == "oracle") {
        require(cfg.shift_spec.has_value(), "shift");
        require(cfg.potential_spec.has_value(), "potential");
        require(cfg.epsilon.has_value(), "epsilon");
        if (cfg.mode != Mode::rational) {
            std::cerr << "note: oracle comparisons always run in exact arithmetic\n";
        }
        Potential p = make_potential(*cfg.potential_spec);
        TransitionSystem ts = make_shift(*cfg.shift_spec);
        OracleOutcome outcome = run_oracle(p, ts, *cfg.epsilon, cfg.budgets, cfg.seed);
        emit(outcome.report, cfg);
        return outcome.ok ? 0 : kExitProperty;
    }
    throw config_error("unknown subcommand '" + cmd + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-alphabet reduction and maximizing measures for countable Markov shifts"};
    app.require_subcommand(1);

    CliOptions opt;
    std::vector<CLI::App*> subs;
    for (const char* name : {"solve", "reduce", "reduce-real", "grid-solve", "verify", "oracle"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", opt.config_path, "run configuration (JSON)")->required();
        sub->add_option("--mode", opt.mode_override, "rational|float");
        sub->add_option("--seed", opt.seed_override, "generator seed override");
        sub->add_option("--out", opt.out_override, "report path (stdout when omitted)");
        sub->add_option("--dot", opt.dot_path, "write the lifted graph as DOT");
        sub->add_option("--debug-inject", opt.injects, "key=value distortion for verify");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt);
    } catch (const certification_error& e) {
        std::cerr << "certification error: " << e.what() << "\n";
        return kExitCertification;
    } catch (const construction_error& e) {
        std::cerr << "construction error: " << e.what() << "\n";
        return kExitConstruction;
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
