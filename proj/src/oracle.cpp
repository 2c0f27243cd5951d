#include "ergopt/oracle.hpp"

#include "ergopt/mmc.hpp"
#include "ergopt/solver.hpp"
#include "ergopt/verify.hpp"

namespace ergopt {

WeightedGraph random_weighted_graph(std::mt19937_64& rng, int max_vertices) {
    int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices));
    WeightedGraph g;
    g.memory = 1;
    for (int v = 0; v < n; ++v) g.vertex_words.push_back({v});
    g.out.assign(static_cast<std::size_t>(n), {});
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (rng() % 100 >= 35) continue; // keep some graphs acyclic
            std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 10);
            std::int64_t num = static_cast<std::int64_t>(rng() % (20 * den + 1)) - 10 * den;
            g.out[static_cast<std::size_t>(a)].push_back({b, Rational(num, den)});
        }
    }
    return g;
}

OracleOutcome run_oracle(const Potential& p, const TransitionSystem& ts, const Rational& epsilon,
                         const Budgets& budgets, std::uint64_t seed) {
    OracleOutcome out;
    Json report;
    report["schema"] = 1;
    report["kind"] = "oracle";
    report["mode"] = "rational";
    report["seed"] = seed;

    ReducePolicy policy;
    policy.connect = ConnectPolicy{budgets.connect_ceiling, budgets.connect_length};
    policy.truncation_limit = budgets.truncation;
    Solution<Rational> sol = solve<Rational>(p, ts, epsilon, policy);
    report["beta"] = sol.beta.str();

    // solver vs oracle on the fixture's own reduced lift
    {
        FiniteGraph g = restrict_to(ts, sol.reduction.hull2.symbols);
        WeightedGraph wg = lift(g, p);
        auto fast = max_mean_cycle<Rational>(wg);
        auto slow = brute_force_mmc<Rational>(wg, static_cast<int>(wg.vertex_count()));
        bool agree = fast && slow && fast->value == slow->value;
        report["reduced_lift"] =
            Json{{"solver", fast ? Json(fast->value.str()) : Json()},
                 {"oracle", slow ? Json(slow->value.str()) : Json()},
                 {"agree", agree}};
        if (!agree) out.ok = false;
    }

    // random digraphs, acyclic ones must agree on "no cycle"
    {
        std::mt19937_64 rng(seed);
        int mismatches = 0;
        Json first;
        for (int i = 0; i < budgets.cases; ++i) {
            WeightedGraph g = random_weighted_graph(rng, 8);
            auto fast = max_mean_cycle<Rational>(g);
            auto slow = brute_force_mmc<Rational>(g, static_cast<int>(g.vertex_count()));
            bool agree = fast.has_value() == slow.has_value() &&
                         (!fast || fast->value == slow->value);
            if (!agree) {
                ++mismatches;
                if (first.is_null()) {
                    Json edges = Json::array();
                    for (int a = 0; a < static_cast<int>(g.vertex_count()); ++a) {
                        for (const auto& e : g.out[static_cast<std::size_t>(a)]) {
                            edges.push_back(
                                Json{{"from", a}, {"to", e.to}, {"weight", e.weight.str()}});
                        }
                    }
                    first = Json{{"instance", i},
                                 {"edges", edges},
                                 {"solver", fast ? Json(fast->value.str()) : Json()},
                                 {"oracle", slow ? Json(slow->value.str()) : Json()}};
                }
            }
        }
        report["random_graphs"] =
            Json{{"cases", budgets.cases}, {"mismatches", mismatches}, {"counterexample", first}};
        if (mismatches > 0) out.ok = false;
    }

    // truncation sweep: nothing small beats beta; leaving the alphabet
    // while staying within epsilon is strictly beaten
    {
        Json sweeps = Json::array();
        bool sweep_ok = true;
        for (Symbol budget = 1; budget <= 5; ++budget) {
            auto orbits = enumerate_orbits(ts, sol.reduction.cut2 + budget, 6);
            int beating = 0, not_strictly_beaten = 0;
            for (const auto& x : orbits) {
                Rational avg = orbit_average<Rational>(p, x);
                if (sol.beta < avg) ++beating;
                if (!sol.reduction.hull2.contains_orbit(x) && !(avg < sol.beta - epsilon) &&
                    !(avg < sol.beta)) {
                    ++not_strictly_beaten;
                }
            }
            sweeps.push_back(Json{{"symbol_budget", budget},
                                  {"orbits", orbits.size()},
                                  {"beating_beta", beating},
                                  {"outside_not_strictly_beaten", not_strictly_beaten}});
            if (beating > 0 || not_strictly_beaten > 0) sweep_ok = false;
        }
        report["truncation_sweep"] = sweeps;
        if (!sweep_ok) out.ok = false;
    }

    report["pass"] = out.ok;
    out.report = report;
    return out;
}

} // namespace ergopt
