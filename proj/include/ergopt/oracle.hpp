#pragma once

#include "ergopt/registry.hpp"

#include <random>

namespace ergopt {

// Random simple digraph with rational weights in [-10, 10] (denominators up
// to 10), between 1 and max_vertices vertices. May be acyclic.
WeightedGraph random_weighted_graph(std::mt19937_64& rng, int max_vertices);

struct OracleOutcome {
    bool ok = true;
    Json report;
};

// Three comparisons: the solver against the brute-force oracle on the
// fixture's reduced lift, the same on random small digraphs, and the
// truncation sweep checking that no small periodic orbit beats the solved
// value (strictly beating any orbit that leaves the reduced alphabet while
// staying within epsilon of the optimum).
OracleOutcome run_oracle(const Potential& p, const TransitionSystem& ts, const Rational& epsilon,
                         const Budgets& budgets, std::uint64_t seed);

} // namespace ergopt
