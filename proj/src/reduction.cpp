#include "ergopt/reduction.hpp"

#include <algorithm>
#include <set>

namespace ergopt {

const Word& AlphabetHull::connector(Symbol from, Symbol to) const {
    auto it = table.find({from, to});
    if (it == table.end()) {
        throw precondition_error("hull table has no entry for (" + std::to_string(from) + ", " +
                                 std::to_string(to) + ")");
    }
    return it->second;
}

bool AlphabetHull::contains(Symbol s) const {
    return std::binary_search(symbols.begin(), symbols.end(), s);
}

bool AlphabetHull::contains_orbit(const PeriodicOrbit& x) const {
    for (Symbol s : x.word()) {
        if (!contains(s)) return false;
    }
    return true;
}

AlphabetHull build_hull(const TransitionSystem& ts, Symbol cut, const ConnectPolicy& policy) {
    if (cut < 1) throw precondition_error("hull cut must be >= 1");
    AlphabetHull hull;
    hull.cut = cut;
    for (Symbol s = 0; s < cut; ++s) hull.base.push_back(s);

    std::set<Symbol> extra;
    for (Symbol i : hull.base) {
        for (Symbol j : hull.base) {
            Word w = connect(ts, i, j, policy);
            hull.max_connector_len =
                std::max(hull.max_connector_len, static_cast<int>(w.size()));
            for (Symbol s : w) {
                if (s >= cut) extra.insert(s);
            }
            hull.table.emplace(std::make_pair(i, j), std::move(w));
        }
    }
    hull.extra.assign(extra.begin(), extra.end());
    hull.symbols = hull.base;
    hull.symbols.insert(hull.symbols.end(), hull.extra.begin(), hull.extra.end());
    std::sort(hull.symbols.begin(), hull.symbols.end());

    FiniteGraph check = restrict_to(ts, hull.symbols);
    if (!check.irreducible) {
        throw construction_error("hull restriction is not irreducible; the irreducibility "
                                 "assertion for the countable system looks wrong");
    }
    return hull;
}

Rational min_over_subshift(const Potential& p, const AlphabetHull& hull,
                           const TransitionSystem& ts) {
    FiniteGraph g = restrict_to(ts, hull.symbols);
    WeightedGraph wg = lift(g, p);
    if (wg.empty()) throw construction_error("reduced subshift is empty");
    auto core = bi_infinite_core(wg);

    bool found = false;
    Rational best(0);
    for (std::size_t a = 0; a < wg.out.size(); ++a) {
        for (std::size_t e = 0; e < wg.out[a].size(); ++e) {
            if (!core[a][e]) continue;
            const Rational& w = wg.out[a][e].weight;
            if (!found || w < best) {
                best = w;
                found = true;
            }
        }
    }
    if (!found) throw construction_error("reduced subshift carries no bi-infinite path");
    return best;
}

} // namespace ergopt
