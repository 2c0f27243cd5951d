#pragma once

#include "ergopt/reduction.hpp"

#include <vector>

namespace ergopt {

// A maximal escape word on a periodic orbit: starts under the first cut,
// ends at the first symbol at or above the second cut, everything between
// stays under the second cut, and the start is pushed as far back as those
// constraints allow. last_low is the greatest offset < len whose symbol
// sits under the first cut.
struct EscapeWord {
    std::int64_t start = 0;    // offset into the canonical period
    std::int64_t len = 0;      // word covers start .. start+len (len+1 symbols)
    std::int64_t last_low = 0;
    bool mean_dominates = false; // word average >= orbit average
};

// Means used by the splice estimates: `full` averages f over the whole
// escape word; `pinched` averages the kept head (offsets 0..last_low) plus
// the escape value, the quantity the spliced orbit is compared against.
struct EscapeMeans {
    Rational full;
    Rational pinched;
};

// Best escape word by full mean, ties broken toward the smallest start.
// mean_dominates is guaranteed whenever the orbit average is within epsilon
// of the optimum; otherwise the best word is returned with the flag down.
EscapeWord find_escape_word(const PeriodicOrbit& x, const Reduction<Rational>& red,
                            const Potential& p);

EscapeMeans escape_means(const Potential& p, const PeriodicOrbit& x, const EscapeWord& esc);

struct SpliceResult {
    PeriodicOrbit orbit;  // z, inside the reduced alphabet
    Rational gain;        // tail_gap / (last_low + 2)
    EscapeWord escape;
    Word connector;
    std::int64_t raw_period; // before primitive/rotation normalization
};

// Close the kept head of the best escape word with the hull's connecting
// word. For orbits within epsilon of the optimum the result improves the
// average by at least `gain`.
SpliceResult splice(const Potential& p, const TransitionSystem& ts, const PeriodicOrbit& x,
                    const Reduction<Rational>& red);

struct ExchangeRecord {
    std::int64_t from;         // block start in the original prefix
    std::int64_t to;           // block end in the original prefix
    Rational original_sum;     // Birkhoff sum over the block's windows
    Rational modified_sum;     // same span on the surgered orbit
};

struct PrefixSurgery {
    PeriodicOrbit orbit{Word{0}}; // z
    Rational sum_bound;           // certified: closed_sum >= sum_bound
    Rational prefix_sum;          // S_m over the input prefix
    std::int64_t anchor = 0;      // m
    int exchanges = 0;
    std::int64_t closed_period = 0; // before normalization
    Rational closed_sum;            // Birkhoff sum of z over closed_period
    Word modified_prefix;
    std::vector<ExchangeRecord> records;
};

// The exchange-and-close procedure: swap every block that climbs past the
// second cut for its hull connector, then close the modified prefix into a
// periodic orbit. The returned bound is
//   prefix_sum + exchanges * tail_gap - 2 V(f) - P0 |min f on hull1|.
// It is certified whenever the reduction's lower bound for the optimum does
// not exceed epsilon (in particular for optimum-normalized potentials);
// sums over segments of different lengths are not comparable otherwise.
PrefixSurgery improve_prefix(const Potential& p, const TransitionSystem& ts, const Word& prefix,
                             const Reduction<Rational>& red);

struct SupportReport {
    bool contained = false;
    std::vector<Symbol> violations;
};

SupportReport support_check(const PeriodicOrbit& x, const AlphabetHull& hull);

} // namespace ergopt
