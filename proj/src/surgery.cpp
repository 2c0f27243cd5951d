#include "ergopt/surgery.hpp"

#include <algorithm>

namespace ergopt {

EscapeWord find_escape_word(const PeriodicOrbit& x, const Reduction<Rational>& red,
                            const Potential& p) {
    const std::int64_t n = x.period();
    if (!x.contains_at_least(red.cut2)) {
        throw not_applicable("orbit " + word_str(x.word()) + " never reaches the second cut");
    }
    if (starts_in(x) >= red.cut1) {
        throw not_applicable("orbit " + word_str(x.word()) + " starts at or above the first cut");
    }

    bool have = false;
    EscapeWord best;
    Rational best_mean(0);
    for (std::int64_t e = 0; e < n; ++e) {
        if (x.at(e) < red.cut2) continue;
        // walk back through the run of symbols under the second cut and
        // take the earliest start under the first cut; starts may wrap to
        // negative raw indices
        std::int64_t start = 0;
        bool found = false;
        for (std::int64_t back = 1; back < n; ++back) {
            Symbol s = x.at(e - back);
            if (s >= red.cut2) break;
            if (s < red.cut1) {
                start = e - back;
                found = true;
            }
        }
        if (!found) continue;
        std::int64_t len = e - start; // forward distance, positive by construction
        Rational mean = birkhoff_sum<Rational>(p, x, start, len + 1) / Rational(len + 1);
        std::int64_t canonical = ((start % n) + n) % n;
        if (!have || best_mean < mean ||
            (best_mean == mean && canonical < best.start)) {
            have = true;
            best_mean = mean;
            best.start = canonical;
            best.len = len;
        }
    }
    if (!have) throw internal_error("escape word scan found nothing despite its gates");

    best.last_low = -1;
    for (std::int64_t j = 0; j < best.len; ++j) {
        if (x.at(best.start + j) < red.cut1) best.last_low = j;
    }
    if (best.last_low < 0) throw internal_error("escape word lost its low head");
    best.mean_dominates = !(best_mean < orbit_average<Rational>(p, x));
    return best;
}

EscapeMeans escape_means(const Potential& p, const PeriodicOrbit& x, const EscapeWord& esc) {
    EscapeMeans out{Rational(0), Rational(0)};
    out.full = birkhoff_sum<Rational>(p, x, esc.start, esc.len + 1) / Rational(esc.len + 1);
    Rational head = birkhoff_sum<Rational>(p, x, esc.start, esc.last_low + 1);
    Rational escape_value = p.eval(x.window(esc.start + esc.len, p.memory()));
    out.pinched = (escape_value + head) / Rational(esc.last_low + 2);
    return out;
}

SpliceResult splice(const Potential& p, const TransitionSystem& ts, const PeriodicOrbit& x,
                    const Reduction<Rational>& red) {
    if (red.hull2.contains_orbit(x)) {
        throw not_applicable("orbit already lives in the reduced alphabet");
    }
    EscapeWord esc = find_escape_word(x, red, p); // re-checks the remaining gates

    Word head = x.window(esc.start, static_cast<int>(esc.last_low) + 1);
    Word connector = red.hull1.connector(head.back(), head.front());
    Word period = head;
    period.insert(period.end(), connector.begin(), connector.end());

    SpliceResult out{PeriodicOrbit(period), red.tail_gap / Rational(esc.last_low + 2), esc,
                     connector, static_cast<std::int64_t>(period.size())};
    if (!ts.allows_cyclic(period)) throw internal_error("spliced orbit is not allowable");
    if (!red.hull2.contains_orbit(out.orbit)) {
        throw internal_error("spliced orbit escaped the reduced alphabet");
    }
    return out;
}

PrefixSurgery improve_prefix(const Potential& p, const TransitionSystem& ts, const Word& prefix,
                             const Reduction<Rational>& red) {
    const int k = p.memory();
    const std::int64_t L = static_cast<std::int64_t>(prefix.size());
    const std::int64_t anchor = L - std::max<std::int64_t>(k - 1, 1);
    if (anchor < 1) throw precondition_error("prefix too short for its potential memory");
    if (!ts.allows_word(prefix)) throw precondition_error("prefix is not allowable");
    if (prefix.front() >= red.cut1) {
        throw precondition_error("prefix must start under the first cut");
    }
    if (prefix[static_cast<std::size_t>(anchor)] >= red.cut1) {
        throw precondition_error("prefix must end under the first cut at its anchor");
    }

    // positions under the first cut, then the blocks between consecutive
    // ones that climb past the second cut
    std::vector<std::int64_t> lows;
    for (std::int64_t i = 0; i <= anchor; ++i) {
        if (prefix[static_cast<std::size_t>(i)] < red.cut1) lows.push_back(i);
    }
    struct Block {
        std::int64_t from, to;
    };
    std::vector<Block> blocks;
    for (std::size_t i = 0; i + 1 < lows.size(); ++i) {
        std::int64_t b = lows[i], a = lows[i + 1];
        if (a == b + 1) continue;
        bool climbs = false;
        for (std::int64_t t = b + 1; t < a; ++t) {
            if (prefix[static_cast<std::size_t>(t)] >= red.cut2) climbs = true;
        }
        if (climbs) blocks.push_back({b, a});
    }
    if (blocks.empty()) throw not_applicable("prefix has no exchangeable block");

    auto window_sum = [&](const Word& w, std::int64_t from, std::int64_t count) {
        Rational total(0);
        for (std::int64_t t = from; t < from + count; ++t) {
            total += p.eval(std::span<const Symbol>(w.data() + t, static_cast<std::size_t>(k)));
        }
        return total;
    };
    // windows on the periodic extension of w, phase fixed by w itself
    auto cyclic_window_sum = [&](const Word& w, std::int64_t from, std::int64_t count) {
        Rational total(0);
        std::int64_t n = static_cast<std::int64_t>(w.size());
        Word window(static_cast<std::size_t>(k), 0);
        for (std::int64_t t = from; t < from + count; ++t) {
            for (int j = 0; j < k; ++j) {
                window[static_cast<std::size_t>(j)] =
                    w[static_cast<std::size_t>(((t + j) % n + n) % n)];
            }
            total += p.eval(window);
        }
        return total;
    };

    PrefixSurgery out{PeriodicOrbit{Word{0}}, Rational(0), Rational(0), anchor, 0, 0,
                      Rational(0), {}, {}};
    out.exchanges = static_cast<int>(blocks.size());
    out.prefix_sum = window_sum(prefix, 0, anchor);

    // rebuild the prefix with each block swapped for its connector
    Word modified;
    std::size_t next_block = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> mod_spans; // per block: [from, to) in modified
    for (std::int64_t i = 0; i <= anchor;) {
        if (next_block < blocks.size() && blocks[next_block].from == i) {
            const Block& blk = blocks[next_block];
            std::int64_t mod_from = static_cast<std::int64_t>(modified.size());
            modified.push_back(prefix[static_cast<std::size_t>(i)]);
            const Word& y = red.hull1.connector(prefix[static_cast<std::size_t>(blk.from)],
                                                prefix[static_cast<std::size_t>(blk.to)]);
            modified.insert(modified.end(), y.begin(), y.end());
            mod_spans.push_back({mod_from, static_cast<std::int64_t>(modified.size())});
            i = blk.to;
            ++next_block;
        } else {
            modified.push_back(prefix[static_cast<std::size_t>(i)]);
            ++i;
        }
    }
    out.modified_prefix = modified;

    Word closing = red.hull1.connector(modified.back(), modified.front());
    Word period = modified;
    period.insert(period.end(), closing.begin(), closing.end());
    if (!ts.allows_cyclic(period)) throw internal_error("closed prefix is not allowable");
    out.orbit = PeriodicOrbit(period);
    out.closed_period = static_cast<std::int64_t>(period.size());
    out.closed_sum = cyclic_window_sum(period, 0, out.closed_period);

    // per-block records, modified side evaluated on the closed word so the
    // trailing windows have context
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        const Block& blk = blocks[bi];
        ExchangeRecord rec{blk.from, blk.to, Rational(0), Rational(0)};
        rec.original_sum = window_sum(prefix, blk.from, blk.to - blk.from);
        std::int64_t span = mod_spans[bi].second - mod_spans[bi].first;
        rec.modified_sum = cyclic_window_sum(period, mod_spans[bi].first, span);
        out.records.push_back(rec);
    }

    Rational p0(red.hull1.max_connector_len);
    out.sum_bound = out.prefix_sum + Rational(out.exchanges) * red.tail_gap -
                    Rational(2) * p.variation_total() - p0 * red.min_f_hull1.abs();
    return out;
}

SupportReport support_check(const PeriodicOrbit& x, const AlphabetHull& hull) {
    SupportReport report;
    for (Symbol s : x.word()) {
        if (!hull.contains(s) &&
            std::find(report.violations.begin(), report.violations.end(), s) ==
                report.violations.end()) {
            report.violations.push_back(s);
        }
    }
    std::sort(report.violations.begin(), report.violations.end());
    report.contained = report.violations.empty();
    return report;
}

} // namespace ergopt
