#pragma once

#include "ergopt/numeric.hpp"
#include "ergopt/orbit.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace ergopt {

// Built-in potential families. All are locally constant with memory k and
// return exact rational values; the per-cylinder sup and the monotone tail
// bound are closed forms, so every cut below is certified, not estimated.

// f(x) = -a * x0, k = 1
struct LinearPotential {
    Rational slope; // a >= 0
};

// f(x) = -a * x0 - min(|x0 - x1|, cap), k = 2
struct CappedDiffPotential {
    Rational slope; // a >= 0
    Rational cap;   // >= 0
};

// f == c, k = 1 (not coercive; exercises the certification-error paths)
struct ConstantPotential {
    Rational value;
};

// explicit values on a finite set of first symbols, linear tail beyond
struct TablePotential {
    std::map<Symbol, Rational> values;
    Rational tail_intercept; // T(i) = tail_intercept - tail_slope * i
    Rational tail_slope;     // >= 0 so T is nonincreasing
};

class Potential {
public:
    explicit Potential(LinearPotential p);
    explicit Potential(CappedDiffPotential p);
    explicit Potential(ConstantPotential p);
    explicit Potential(TablePotential p);

    int memory() const { return memory_; }
    const std::string& name() const { return name_; }

    // f on the cylinder fixed by the first `memory` symbols of the window
    Rational eval(std::span<const Symbol> window) const;

    // upper bound for sup f|[i]; exact for every built-in family
    Rational cylinder_sup(Symbol i) const;

    // From tail_start() on, cylinder_sup coincides with the nonincreasing
    // tail certificate; below it the values may be arbitrary (table family).
    Symbol tail_start() const;
    Rational tail_value(Symbol i) const;

    // V_1 .. V_{k-1}; zero beyond the memory by local constancy
    const std::vector<Rational>& variation_bounds() const { return variation_; }
    Rational variation_total() const { return variation_total_; }

    Rational global_sup() const { return global_sup_; }
    bool exact_values() const { return true; }

private:
    std::variant<LinearPotential, CappedDiffPotential, ConstantPotential, TablePotential> impl_;
    int memory_;
    std::string name_;
    std::vector<Rational> variation_;
    Rational variation_total_;
    Rational global_sup_;
};

// ---- shared Birkhoff arithmetic -------------------------------------------

Rational eval_potential(const Potential& p, std::span<const Symbol> word);
Rational eval_potential(const Potential& p, const Word& word);

// validating form: the defining prefix must be allowable under ts
class TransitionSystem;
Rational eval_potential(const Potential& p, const Word& word, const TransitionSystem& ts);

Rational cylinder_sup_query(const Potential& p, Symbol i);

template <class S>
S birkhoff_sum(const Potential& p, const PeriodicOrbit& x, std::int64_t start, std::int64_t count) {
    if (count < 1) throw precondition_error("birkhoff_sum needs count >= 1");
    S total = num<S>::zero();
    for (std::int64_t i = 0; i < count; ++i) {
        total = total + num<S>::from(p.eval(x.window(start + i, p.memory())));
    }
    return total;
}

template <class S>
S orbit_average(const Potential& p, const PeriodicOrbit& x) {
    return birkhoff_sum<S>(p, x, 0, x.period()) / num<S>::from(Rational(x.period()));
}

inline Rational integrate(const PeriodicMeasure& mu, const Potential& p) {
    return orbit_average<Rational>(p, mu.orbit);
}

// Least I with cylinder_sup_query(p, j) certifiably below `target` for every
// j >= I. Uses the monotone tail beyond tail_start and per-symbol checks in
// the explicit region. Throws certification_error when the tail never
// crosses (non-coercive certificate).
template <class S>
Symbol least_threshold(const Potential& p, const S& target) {
    const Symbol t0 = p.tail_start();
    auto below_at = [&](Symbol j) {
        return num<S>::below(num<S>::from(p.cylinder_sup(j)), target);
    };
    auto tail_below = [&](Symbol j) {
        return num<S>::below(num<S>::from(p.tail_value(j)), target);
    };

    // least index >= t0 where the nonincreasing tail certificate goes below
    constexpr Symbol kCap = Symbol(1) << 62;
    Symbol hi = t0;
    Symbol step = 1;
    while (!tail_below(hi)) {
        if (hi >= kCap) {
            throw certification_error(
                "tail certificate for '" + p.name() + "' never crosses the threshold");
        }
        hi = hi + step > kCap ? kCap : hi + step;
        step *= 2;
    }
    Symbol lo = t0;
    while (lo < hi) { // first true in the monotone tail region
        Symbol mid = lo + (hi - lo) / 2;
        if (tail_below(mid)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    const Symbol tail_cut = lo;

    if (tail_cut > t0) return tail_cut; // blocked inside the tail region
    // walk the explicit region downward while each symbol stays below
    Symbol i = t0;
    while (i > 0 && below_at(i - 1)) --i;
    return i;
}

// sup_{j >= from} cylinder_sup_query(p, j), realized as a finite max: the
// explicit region is finite and the tail is nonincreasing.
template <class S>
S tail_sup_from(const Potential& p, Symbol from) {
    const Symbol t0 = p.tail_start();
    S best = num<S>::from(p.tail_value(from > t0 ? from : t0));
    for (Symbol j = from; j < t0; ++j) {
        best = num<S>::max(best, num<S>::from(p.cylinder_sup(j)));
    }
    return best;
}

} // namespace ergopt
