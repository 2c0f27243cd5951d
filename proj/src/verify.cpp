#include "ergopt/verify.hpp"

#include "ergopt/solver.hpp"

#include <set>

namespace ergopt {

std::vector<PeriodicOrbit> enumerate_orbits(const TransitionSystem& ts, Symbol max_symbol,
                                            int max_period) {
    std::set<Word> canonical;
    Word w;
    auto grow = [&](auto&& self) -> void {
        if (!w.empty() && ts.allows_cyclic(w)) canonical.insert(PeriodicOrbit(w).word());
        if (static_cast<int>(w.size()) == max_period) return;
        for (Symbol s = 0; s <= max_symbol; ++s) {
            if (!w.empty() && !ts.allows(w.back(), s)) continue;
            w.push_back(s);
            self(self);
            w.pop_back();
        }
    };
    grow(grow);
    std::vector<PeriodicOrbit> out;
    out.reserve(canonical.size());
    for (const auto& word : canonical) out.emplace_back(word);
    return out;
}

namespace {

// one excursion from 0 up to `peak` and back, allowable by construction
Word excursion(const TransitionSystem& ts, Symbol peak, const ConnectPolicy& policy) {
    Word up = connect(ts, 0, peak, policy);
    Word down = connect(ts, peak, 0, policy);
    Word out = up;
    out.push_back(peak);
    out.insert(out.end(), down.begin(), down.end());
    return out;
}

// random-walk excursion: climb-biased walk from 0 that must touch
// [peak_min, peak_max] and come back to a symbol that can return to 0;
// nullopt when the walk strays too long
std::optional<Word> walk_excursion(const TransitionSystem& ts, Symbol peak_min, Symbol peak_max,
                                   int max_steps, std::mt19937_64& rng) {
    Word out;
    Symbol cur = 0;
    bool peaked = false;
    for (int step = 0; step < max_steps; ++step) {
        std::vector<Symbol> up, any;
        for (Symbol s = 0; s <= peak_max; ++s) {
            if (!ts.allows(cur, s)) continue;
            any.push_back(s);
            if (s > cur) up.push_back(s);
        }
        if (any.empty()) return std::nullopt;
        Symbol next;
        if (!peaked && !up.empty() && rng() % 10 < 7) {
            next = up[rng() % up.size()];
        } else {
            next = any[rng() % any.size()];
        }
        out.push_back(next);
        cur = next;
        if (cur >= peak_min) peaked = true;
        if (peaked && ts.allows(cur, 0) && rng() % 3 == 0) return out;
    }
    return std::nullopt;
}

} // namespace

OrbitSampler::OrbitSampler(const TransitionSystem& ts, Symbol peak_min, Symbol peak_max,
                           int max_period, std::uint64_t seed, const ConnectPolicy& policy)
    : ts_(ts), peak_min_(peak_min), peak_max_(peak_max), max_period_(max_period), policy_(policy),
      rng_(seed) {
    if (!ts.allows(0, 0)) {
        throw precondition_error("orbit sampler needs a self-transition at 0");
    }
    if (peak_max_ < peak_min_ || peak_min_ < 1) throw precondition_error("bad peak range");
    // at least one excursion plus padding must fit
    int need = static_cast<int>(excursion(ts_, peak_min_, policy_).size()) + 4;
    max_period_ = std::max(max_period_, need);
}

PeriodicOrbit OrbitSampler::next() {
    for (int attempt = 0; attempt < 256; ++attempt) {
        Word word;
        int events = 1 + static_cast<int>(rng_() % 2);
        for (int e = 0; e < events; ++e) {
            Symbol peak =
                peak_min_ + static_cast<Symbol>(rng_() % static_cast<std::uint64_t>(
                                                            peak_max_ - peak_min_ + 1));
            Word exc;
            if (rng_() % 2 == 0) {
                auto walked = walk_excursion(ts_, peak_min_, peak_max_, max_period_ / 2, rng_);
                if (!walked) continue;
                exc = *walked;
            } else {
                exc = excursion(ts_, peak, policy_);
            }
            int room = max_period_ - static_cast<int>(word.size() + exc.size());
            if (room < 1) break;
            int zeros = 1 + static_cast<int>(rng_() % static_cast<std::uint64_t>(room));
            word.insert(word.end(), static_cast<std::size_t>(zeros), Symbol(0));
            word.insert(word.end(), exc.begin(), exc.end());
        }
        if (word.empty() || static_cast<int>(word.size()) > max_period_) continue;
        if (!ts_.allows_cyclic(word)) continue;
        PeriodicOrbit x(std::move(word));
        if (!x.contains_at_least(peak_min_)) continue;
        return x;
    }
    throw internal_error("orbit sampler starved");
}

PrefixSampler::PrefixSampler(const TransitionSystem& ts, Symbol peak_min, Symbol peak_max,
                             int max_length, std::uint64_t seed, const ConnectPolicy& policy)
    : ts_(ts), peak_min_(peak_min), peak_max_(peak_max), max_length_(max_length), policy_(policy),
      rng_(seed) {
    if (!ts.allows(0, 0)) {
        throw precondition_error("prefix sampler needs a self-transition at 0");
    }
    if (peak_max_ < peak_min_ || peak_min_ < 1) throw precondition_error("bad peak range");
    int need = static_cast<int>(excursion(ts_, peak_min_, policy_).size()) + 8;
    max_length_ = std::max(max_length_, need);
}

Word PrefixSampler::next(int memory) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        Word word{0};
        int events = 1 + static_cast<int>(rng_() % 2);
        for (int e = 0; e < events; ++e) {
            Symbol peak =
                peak_min_ + static_cast<Symbol>(rng_() % static_cast<std::uint64_t>(
                                                            peak_max_ - peak_min_ + 1));
            Word exc = excursion(ts_, peak, policy_);
            int room = max_length_ - static_cast<int>(word.size() + exc.size()) - memory;
            if (room < 1) break;
            word.insert(word.end(), exc.begin(), exc.end());
            int zeros = 1 + static_cast<int>(rng_() % static_cast<std::uint64_t>(room));
            word.insert(word.end(), static_cast<std::size_t>(zeros), Symbol(0));
        }
        // trailing zeros double as lookahead context past the anchor
        word.insert(word.end(), static_cast<std::size_t>(std::max(memory - 1, 0)), Symbol(0));
        if (static_cast<int>(word.size()) > max_length_) continue;
        bool reached = false;
        for (Symbol s : word) reached = reached || s >= peak_min_;
        if (!reached) continue;
        if (!ts_.allows_word(word)) continue;
        return word;
    }
    throw internal_error("prefix sampler starved");
}

namespace {

Json orbit_case_json(const PeriodicOrbit& x) {
    Json j;
    j["orbit"] = to_json(x);
    return j;
}

void record_failure(PropertyStats& st, Json details) {
    ++st.failures;
    if (st.counterexample.is_null()) st.counterexample = std::move(details);
}

} // namespace

VerifyOutcome run_verify(const Potential& p, const TransitionSystem& ts, const Rational& epsilon,
                         const Budgets& budgets, std::uint64_t seed,
                         const std::map<std::string, std::string>& inject) {
    ReducePolicy policy;
    policy.connect = ConnectPolicy{budgets.connect_ceiling, budgets.connect_length};
    policy.truncation_limit = budgets.truncation;
    Solution<Rational> sol = solve<Rational>(p, ts, epsilon, policy);
    Reduction<Rational> red = sol.reduction;

    for (const auto& [key, value] : inject) {
        if (key == "delta_scale") {
            red.tail_gap = red.tail_gap * Rational::parse(value);
            red.notes.push_back("debug injection: tail_gap scaled by " + value);
        } else {
            throw config_error("unknown debug injection '" + key + "'");
        }
    }

    const Rational beta = sol.beta;
    const Rational bar = beta - epsilon; // qualification gate, true optimum side

    VerifyOutcome out;
    out.properties = {
        {"fact-domination-and-pinch", 0, 0, Json(), Json::array()},
        {"splice-gain", 0, 0, Json(), Json::array()},
        {"splice-containment", 0, 0, Json(), Json::array()},
        {"splice-period-doubling", 0, 0, Json(), Json::array()},
        {"exchange-gain", 0, 0, Json(), Json::array()},
        {"closing-bound", 0, 0, Json(), Json::array()},
    };
    PropertyStats& fact2 = out.properties[0];
    PropertyStats& gain = out.properties[1];
    PropertyStats& contain = out.properties[2];
    PropertyStats& doubling = out.properties[3];
    PropertyStats& exchange = out.properties[4];
    PropertyStats& closing = out.properties[5];

    // Size the generator so qualifying orbits exist at all: one excursion
    // past the second cut costs roughly its Birkhoff sum, and staying within
    // epsilon of the optimum takes about |cost| / epsilon symbols of padding.
    std::string period_note;
    int period_budget = budgets.max_period;
    {
        Word probe = connect(ts, 0, red.cut2, policy.connect);
        probe.insert(probe.begin(), 0);
        probe.push_back(red.cut2);
        Word back = connect(ts, red.cut2, 0, policy.connect);
        probe.insert(probe.end(), back.begin(), back.end());
        for (int pad = 0; pad < p.memory(); ++pad) probe.push_back(0);
        Rational cost(0);
        for (std::size_t t = 0; t + static_cast<std::size_t>(p.memory()) <= probe.size(); ++t) {
            cost += p.eval(std::span<const Symbol>(probe.data() + t,
                                                   static_cast<std::size_t>(p.memory())));
        }
        Rational dilution = (cost - beta * Rational(static_cast<std::int64_t>(probe.size()))).abs() /
                            epsilon;
        int needed = static_cast<int>(std::min<std::int64_t>(dilution.floor() + 1, 8192)) +
                     static_cast<int>(probe.size()) + 8;
        if (needed > period_budget) {
            period_budget = needed;
            period_note = "generator period budget extended to " + std::to_string(needed) +
                          " so qualifying orbits fit";
        }
    }

    // exhaustive small orbits first (the tight boundary cases live there),
    // then sampled ones until the case budget is met
    std::vector<PeriodicOrbit> pool =
        enumerate_orbits(ts, red.cut2 + std::min<Symbol>(budgets.symbol_slack, 3),
                         std::min(budgets.max_period, 6));
    OrbitSampler orbits(ts, red.cut2, red.cut2 + budgets.symbol_slack, period_budget, seed,
                        policy.connect);
    std::size_t pool_next = 0;
    const int max_attempts = budgets.cases * 400 + 64;
    int attempts = 0;
    while (gain.cases < budgets.cases && attempts++ < max_attempts) {
        PeriodicOrbit x = pool_next < pool.size() ? pool[pool_next++] : orbits.next();
        if (red.hull2.contains_orbit(x)) continue;
        if (starts_in(x) >= red.cut1) continue;
        if (!x.contains_at_least(red.cut2)) continue;
        Rational avg = orbit_average<Rational>(p, x);
        if (avg < bar) continue;

        // qualifying case: orbit leaves the reduced alphabet yet stays
        // within epsilon of the optimum
        EscapeWord esc = find_escape_word(x, red, p);
        EscapeMeans means = escape_means(p, x, esc);
        ++fact2.cases;
        if (!esc.mean_dominates || means.pinched < means.full) {
            Json cx = orbit_case_json(x);
            cx["full_mean"] = means.full.str();
            cx["pinched_mean"] = means.pinched.str();
            cx["mean_dominates"] = esc.mean_dominates;
            record_failure(fact2, std::move(cx));
        }

        SpliceResult spl = splice(p, ts, x, red);
        Rational improved = orbit_average<Rational>(p, spl.orbit);
        ++gain.cases;
        if (improved < avg + spl.gain) {
            Json cx = orbit_case_json(x);
            cx["spliced"] = to_json(spl.orbit);
            cx["orbit_average"] = avg.str();
            cx["spliced_average"] = improved.str();
            cx["claimed_gain"] = spl.gain.str();
            record_failure(gain, std::move(cx));
        } else if (budgets.log_cases > 0 &&
                   static_cast<int>(gain.samples.size()) < budgets.log_cases) {
            Json row = orbit_case_json(x);
            row["spliced"] = to_json(spl.orbit);
            row["orbit_average"] = avg.str();
            row["spliced_average"] = improved.str();
            row["claimed_gain"] = spl.gain.str();
            row["full_mean"] = means.full.str();
            row["pinched_mean"] = means.pinched.str();
            row["pass"] = true;
            gain.samples.push_back(std::move(row));
        }

        ++contain.cases;
        SupportReport support = support_check(spl.orbit, red.hull2);
        if (!support.contained || !ts.allows_cyclic(spl.orbit.word())) {
            Json cx = orbit_case_json(x);
            cx["spliced"] = to_json(spl.orbit);
            cx["violations"] = to_json(support.violations);
            record_failure(contain, std::move(cx));
        }

        ++doubling.cases;
        Word twice = x.word();
        twice.insert(twice.end(), x.word().begin(), x.word().end());
        SpliceResult spl2 = splice(p, ts, PeriodicOrbit(twice), red);
        if (!(spl2.orbit == spl.orbit)) {
            Json cx = orbit_case_json(x);
            cx["spliced"] = to_json(spl.orbit);
            cx["spliced_doubled"] = to_json(spl2.orbit);
            record_failure(doubling, std::move(cx));
        }
    }

    // The exchange and closing estimates compare Birkhoff sums across
    // segments of different lengths, so they are theorems only when the
    // baseline rate is non-positive, i.e. the optimum sits at or below
    // epsilon (potentials normalized by their optimum always qualify).
    // Above that the campaign skips them instead of asserting a non-theorem.
    std::string endgame_note;
    bool endgame_applicable = !(epsilon < red.beta_lb);
    if (!endgame_applicable) {
        endgame_note =
            "exchange-gain and closing-bound skipped: the solved optimum exceeds epsilon; "
            "shift the potential by its optimum to exercise them";
    }

    PrefixSampler prefixes(ts, red.cut2, red.cut2 + budgets.symbol_slack,
                           std::max(period_budget, 8), seed + 1, policy.connect);
    attempts = 0;
    while (endgame_applicable && closing.cases < budgets.cases && attempts++ < max_attempts) {
        Word prefix = prefixes.next(p.memory());
        PrefixSurgery surgery;
        try {
            surgery = improve_prefix(p, ts, prefix, red);
        } catch (const not_applicable&) {
            continue;
        }
        ++closing.cases;
        if (surgery.closed_sum < surgery.sum_bound) {
            Json cx;
            cx["prefix"] = to_json(prefix);
            cx["closed"] = to_json(surgery.orbit);
            cx["closed_sum"] = surgery.closed_sum.str();
            cx["sum_bound"] = surgery.sum_bound.str();
            record_failure(closing, std::move(cx));
        }
        for (const auto& rec : surgery.records) {
            ++exchange.cases;
            if (rec.modified_sum < rec.original_sum + red.tail_gap) {
                Json cx;
                cx["prefix"] = to_json(prefix);
                cx["block_from"] = rec.from;
                cx["block_to"] = rec.to;
                cx["original_sum"] = rec.original_sum.str();
                cx["modified_sum"] = rec.modified_sum.str();
                cx["tail_gap"] = red.tail_gap.str();
                record_failure(exchange, std::move(cx));
            }
        }
    }

    Json report;
    report["schema"] = 1;
    report["kind"] = "verify";
    report["mode"] = "rational";
    report["seed"] = seed;
    report["beta"] = beta.str();
    report["epsilon"] = epsilon.str();
    report["tail_gap"] = red.tail_gap.str();
    Json notes = Json::array();
    if (!period_note.empty()) notes.push_back(period_note);
    if (!endgame_note.empty()) notes.push_back(endgame_note);
    if (!notes.empty()) report["notes"] = notes;
    if (!inject.empty()) {
        Json inj;
        for (const auto& [k, v] : inject) inj[k] = v;
        report["debug_inject"] = inj;
    }
    Json props = Json::array();
    for (auto& st : out.properties) {
        Json pj;
        pj["name"] = st.name;
        pj["cases"] = st.cases;
        pj["failures"] = st.failures;
        pj["counterexample"] = st.counterexample;
        if (!st.samples.empty()) pj["samples"] = st.samples;
        props.push_back(pj);
        if (st.failures > 0) out.ok = false;
    }
    report["properties"] = props;
    report["pass"] = out.ok;
    out.report = report;
    return out;
}

} // namespace ergopt
