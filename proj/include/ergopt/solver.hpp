#pragma once

#include "ergopt/reduction.hpp"

#include <string>
#include <vector>

namespace ergopt {

struct CheckRecord {
    std::string name;
    bool pass;
};

// beta, the maximizing periodic measure on the reduced subshift, and the
// reduction that certifies the restriction loses nothing.
template <class S>
struct Solution {
    S beta{};
    PeriodicOrbit orbit{Word{0}};
    PeriodicMeasure measure{PeriodicOrbit{Word{0}}};
    Reduction<S> reduction;
    Mode mode = num<S>::mode;
    std::vector<CheckRecord> certificate;
};

template <class S>
Solution<S> solve(const Potential& p, const TransitionSystem& ts, const Rational& epsilon,
                  const ReducePolicy& policy = {}) {
    Solution<S> sol;
    sol.reduction = reduce<S>(p, ts, epsilon, policy);

    FiniteGraph g = restrict_to(ts, sol.reduction.hull2.symbols);
    WeightedGraph wg = lift(g, p);
    auto best = max_mean_cycle<S>(wg);
    if (!best) throw construction_error("reduced subshift carries no cycle");

    sol.orbit = PeriodicOrbit(wg.spell_cycle(best->cycle));
    sol.measure = PeriodicMeasure{sol.orbit};
    // report the orbit's own average so beta and the measure agree exactly
    // in both arithmetic modes
    sol.beta = orbit_average<S>(p, sol.orbit);
    bool mean_matches;
    if constexpr (num<S>::mode == Mode::rational) {
        mean_matches = (sol.beta == best->value);
    } else {
        mean_matches = num<S>::abs(sol.beta - best->value) <=
                       std::ldexp(1.0, -30) * num<S>::max(1.0, num<S>::abs(best->value));
    }
    sol.certificate.push_back({"cycle-mean-equals-orbit-average", mean_matches});
    sol.certificate.push_back(
        {"orbit-inside-reduced-alphabet", sol.reduction.hull2.contains_orbit(sol.orbit)});
    sol.certificate.push_back({"orbit-cyclically-allowable", ts.allows_cyclic(sol.orbit.word())});
    for (const auto& check : sol.certificate) {
        if (!check.pass && num<S>::mode == Mode::rational) {
            throw internal_error("solution check failed: " + check.name);
        }
    }
    return sol;
}

// DOT rendering of a lifted graph with one cycle highlighted; the cycle is
// given as vertex indices into the lift.
std::string to_dot(const WeightedGraph& g, const std::vector<int>& highlight_cycle);

} // namespace ergopt
