#pragma once

#include "ergopt/registry.hpp"
#include "ergopt/surgery.hpp"

#include <random>

namespace ergopt {

// All distinct periodic orbits with symbols <= max_symbol and period <=
// max_period, in canonical form. Exhaustive, for desk-scale sweeps.
std::vector<PeriodicOrbit> enumerate_orbits(const TransitionSystem& ts, Symbol max_symbol,
                                            int max_period);

// Deterministic sampler for cyclically allowable orbits that leave the
// reduced alphabet: zero-padding with one or two excursions, either along
// the canonical connecting words or along a climb-biased random walk, so
// every draw is allowable by construction. max_period is a floor; it grows
// if a single excursion cannot fit.
class OrbitSampler {
public:
    OrbitSampler(const TransitionSystem& ts, Symbol peak_min, Symbol peak_max, int max_period,
                 std::uint64_t seed, const ConnectPolicy& policy = {});

    PeriodicOrbit next();

private:
    const TransitionSystem& ts_;
    Symbol peak_min_;
    Symbol peak_max_;
    int max_period_;
    ConnectPolicy policy_;
    std::mt19937_64 rng_;
};

// Same construction opened up into a finite prefix: starts and ends at 0
// and contains at least one excursion past `peak_min`.
class PrefixSampler {
public:
    PrefixSampler(const TransitionSystem& ts, Symbol peak_min, Symbol peak_max, int max_length,
                  std::uint64_t seed, const ConnectPolicy& policy = {});

    Word next(int memory); // trailing zeros cover the potential's lookahead

private:
    const TransitionSystem& ts_;
    Symbol peak_min_;
    Symbol peak_max_;
    int max_length_;
    ConnectPolicy policy_;
    std::mt19937_64 rng_;
};

struct PropertyStats {
    std::string name;
    int cases = 0;
    int failures = 0;
    Json counterexample; // first failing case, verbatim
    Json samples = Json::array();
};

struct VerifyOutcome {
    bool ok = true;
    std::vector<PropertyStats> properties;
    Json report;
};

// Runs the surgery property campaign against the solved fixture: the
// pinched-mean domination, the splice gain, the per-exchange gain, the
// closing bound, and the containment checks. debug_inject knobs distort
// the reduction record on purpose so the campaign can be shown to catch a
// wrong constant (supported: delta_scale=<rational>).
VerifyOutcome run_verify(const Potential& p, const TransitionSystem& ts, const Rational& epsilon,
                         const Budgets& budgets, std::uint64_t seed,
                         const std::map<std::string, std::string>& inject = {});

} // namespace ergopt
