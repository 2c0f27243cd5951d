#pragma once

#include "ergopt/mmc.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ergopt {

// Finite alphabet closed under one chosen connecting word per ordered pair
// of cut symbols: base = {0..cut-1}, extra = symbols used by the table
// words, symbols = base U extra. The restriction to symbols is verified
// irreducible at construction.
struct AlphabetHull {
    Symbol cut = 0;
    std::vector<Symbol> base;
    std::map<std::pair<Symbol, Symbol>, Word> table;
    std::vector<Symbol> extra;
    std::vector<Symbol> symbols;
    int max_connector_len = 0; // 0 iff every pair connects directly

    const Word& connector(Symbol from, Symbol to) const;
    bool contains(Symbol s) const;
    bool contains_orbit(const PeriodicOrbit& x) const;
};

AlphabetHull build_hull(const TransitionSystem& ts, Symbol cut, const ConnectPolicy& policy = {});

// Exact minimum of f over the k-words of the restriction that lie on
// bi-infinite paths (dead-end words do not belong to the subshift).
Rational min_over_subshift(const Potential& p, const AlphabetHull& hull,
                           const TransitionSystem& ts);

// least cut with every cylinder sup beyond it certifiably under beta_lb - epsilon
template <class S>
Symbol coercivity_cut(const Potential& p, const S& beta_lb, const S& epsilon) {
    if (!(num<S>::zero() < epsilon)) throw precondition_error("epsilon must be positive");
    return least_threshold<S>(p, beta_lb - epsilon);
}

// The two splice penalties and their minimum. c_word guards splices that
// need a nonempty connecting word, c_direct the direct ones; both are
// computed from certified bounds in place of the unknown optimum, which
// only moves them conservatively (asserted where that holds).
template <class S>
struct SpliceConstants {
    S c_word;
    S c_direct;
    S c_min;
};

template <class S>
SpliceConstants<S> splice_constants(const S& min_f_hull1, int max_connector_len,
                                    const S& beta_lb, const S& beta_abs_ub, const S& epsilon,
                                    const S& variation_total) {
    if (num<S>::abs(beta_lb) > beta_abs_ub) {
        throw precondition_error("beta_abs_ub must dominate |beta_lb|");
    }
    S p0 = num<S>::from(Rational(max_connector_len));
    S one = num<S>::from(Rational(1));
    S two = num<S>::from(Rational(2));
    SpliceConstants<S> c;
    c.c_word = -(p0 * num<S>::abs(min_f_hull1) + (p0 - one) * beta_abs_ub + two * variation_total);
    c.c_direct = beta_lb - epsilon - variation_total;
    c.c_min = num<S>::min(c.c_word, c.c_direct);
    if (max_connector_len >= 1) {
        // substituting the abs bound for the optimum must not loosen c_word
        S with_lb = -(p0 * num<S>::abs(min_f_hull1) + (p0 - one) * num<S>::abs(beta_lb) +
                      two * variation_total);
        if (with_lb < c.c_word) throw internal_error("c_word substitution not conservative");
    }
    return c;
}

// Full record of the construction. `certified` is true when every cut was
// validated against the tail certificate (always, in automatic mode); with
// caller-supplied thresholds an unverifiable second cut demotes the record
// to uncertified instead of failing, and the notes say why.
template <class S>
struct Reduction {
    S epsilon{};
    S beta_lb{};
    S beta_abs_ub{};
    Symbol cut1 = 0;
    AlphabetHull hull1;
    S min_f_hull1{};
    S c_word{};
    S c_direct{};
    S c_min{};
    Symbol cut2 = 0;
    AlphabetHull hull2;
    S tail_gap{}; // delta
    bool certified = false;
    bool refined = false;
    std::vector<std::string> notes;
};

struct ReducePolicy {
    ConnectPolicy connect;
    Symbol truncation_limit = 4096; // search span for the first witness cycle
    std::optional<Symbol> user_cut1;
    std::optional<Symbol> user_cut2;
    bool refine = false;
};

namespace reduction_detail {

// best periodic average in the smallest truncation {0..T} that carries a
// cycle; any cycle would do as a lower bound, the best one tightens cuts
template <class S>
S truncation_lower_bound(const Potential& p, const TransitionSystem& ts, Symbol limit) {
    for (Symbol top = 0; top <= limit; top = (top == 0 ? 1 : top * 2)) {
        std::vector<Symbol> symbols;
        for (Symbol s = 0; s <= top; ++s) symbols.push_back(s);
        FiniteGraph g = restrict_to(ts, symbols);
        WeightedGraph wg = lift(g, p);
        if (auto r = max_mean_cycle<S>(wg)) return r->value;
    }
    throw construction_error("no periodic orbit found in truncations up to " +
                             std::to_string(limit));
}

} // namespace reduction_detail

template <class S>
Reduction<S> reduce(const Potential& p, const TransitionSystem& ts, const Rational& epsilon,
                    const ReducePolicy& policy = {}) {
    if (!ts.irreducible_assertion()) {
        throw precondition_error("transition system lacks the irreducibility assertion");
    }
    if (!(Rational(0) < epsilon)) throw precondition_error("epsilon must be positive");

    S eps = num<S>::from(epsilon);
    S beta_lb = reduction_detail::truncation_lower_bound<S>(p, ts, policy.truncation_limit);

    for (int pass = 0;; ++pass) {
        Reduction<S> red;
        red.epsilon = eps;
        red.beta_lb = beta_lb;
        red.beta_abs_ub = num<S>::max(num<S>::abs(beta_lb), num<S>::abs(num<S>::from(p.global_sup())));

        if (policy.user_cut1) {
            red.cut1 = *policy.user_cut1;
            if (red.cut1 < 1) throw precondition_error("user cut1 must be >= 1");
            Symbol checked = 0;
            bool verifiable = true;
            try {
                checked = coercivity_cut<S>(p, beta_lb, eps);
            } catch (const certification_error&) {
                verifiable = false;
            }
            if (verifiable && checked <= red.cut1) {
                red.notes.push_back("cut1 supplied by caller; tail certificate confirms it");
            } else {
                red.notes.push_back(
                    "cut1 supplied by caller; accepted on the caller's assertion about the "
                    "true optimum");
            }
        } else {
            red.cut1 = coercivity_cut<S>(p, beta_lb, eps);
            if (red.cut1 < 1) {
                // would mean sup f < beta_lb - epsilon, impossible for a
                // genuine lower bound
                throw internal_error("coercivity cut collapsed to zero");
            }
        }

        red.hull1 = build_hull(ts, red.cut1, policy.connect);
        red.min_f_hull1 = num<S>::from(min_over_subshift(p, red.hull1, ts));
        auto consts = splice_constants<S>(red.min_f_hull1, red.hull1.max_connector_len, beta_lb,
                                          red.beta_abs_ub, eps, num<S>::from(p.variation_total()));
        red.c_word = consts.c_word;
        red.c_direct = consts.c_direct;
        red.c_min = consts.c_min;

        if (policy.user_cut2) {
            red.cut2 = *policy.user_cut2;
            if (red.cut2 < red.cut1) throw precondition_error("user cut2 must be >= cut1");
            bool ok = true;
            try {
                Symbol needed = least_threshold<S>(p, red.c_min);
                ok = needed <= red.cut2;
            } catch (const certification_error&) {
                ok = false;
            }
            if (ok) {
                red.certified = true;
                red.notes.push_back("cut2 supplied by caller; verified against the computed bound");
            } else {
                red.certified = false;
                red.notes.push_back(
                    "cut2 supplied by caller but the tail certificate cannot place every "
                    "later cylinder under the computed bound; record left uncertified");
            }
        } else {
            Symbol by_bound = least_threshold<S>(p, red.c_min);
            red.cut2 = by_bound > red.cut1 ? by_bound : red.cut1;
            red.certified = true;
        }

        red.hull2 = build_hull(ts, red.cut2, policy.connect);
        for (Symbol s : red.hull1.symbols) {
            if (!red.hull2.contains(s)) {
                // the connect choice is canonical, so hull1's table is a
                // sub-table of hull2's and this cannot trip
                throw internal_error("hull1 escaped hull2");
            }
        }

        red.tail_gap = red.c_min - tail_sup_from<S>(p, red.cut2);
        if (red.certified && !(num<S>::zero() < red.tail_gap)) {
            throw internal_error("certified reduction produced a nonpositive tail gap");
        }

        if (policy.refine && pass == 0) {
            FiniteGraph g2 = restrict_to(ts, red.hull2.symbols);
            auto refined = max_mean_cycle<S>(lift(g2, p));
            if (!refined) throw construction_error("reduced subshift carries no cycle");
            if (beta_lb < refined->value) {
                beta_lb = refined->value; // tightens, never loosens
                continue;
            }
            red.refined = true;
            red.notes.push_back("refinement pass left the lower bound unchanged");
            return red;
        }
        red.refined = policy.refine;
        return red;
    }
}

} // namespace ergopt
