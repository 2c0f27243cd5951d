#include "ergopt/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace ergopt {

int FiniteGraph::index_of(Symbol s) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), s);
    if (it == vertices.end() || *it != s) return -1;
    return static_cast<int>(it - vertices.begin());
}

std::size_t FiniteGraph::edge_count() const {
    std::size_t n = 0;
    for (const auto& row : out) n += row.size();
    return n;
}

bool FiniteGraph::has_edge(Symbol a, Symbol b) const {
    int ia = index_of(a), ib = index_of(b);
    if (ia < 0 || ib < 0) return false;
    return std::find(out[ia].begin(), out[ia].end(), ib) != out[ia].end();
}

namespace {

// Tarjan, iterative. Component ids are assigned in reverse topological
// order of discovery; only count and membership matter here.
std::pair<std::vector<int>, int> strongly_connected(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    int next_index = 0, comp_count = 0;

    struct Frame {
        int v;
        std::size_t edge;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.edge < adj[f.v].size()) {
                int w = adj[f.v][f.edge++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = comp_count;
                        if (w == f.v) break;
                    }
                    ++comp_count;
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }
    return {comp, comp_count};
}

} // namespace

std::vector<std::vector<int>> scc_components(const std::vector<std::vector<int>>& adj) {
    auto [comp, count] = strongly_connected(adj);
    std::vector<std::vector<int>> comps(static_cast<std::size_t>(count));
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
        comps[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
    }
    for (auto& c : comps) std::sort(c.begin(), c.end());
    return comps;
}

FiniteGraph restrict_to(const TransitionSystem& ts, const std::vector<Symbol>& symbols) {
    if (symbols.empty()) throw precondition_error("restriction to an empty symbol set");
    FiniteGraph g;
    g.vertices = symbols;
    std::sort(g.vertices.begin(), g.vertices.end());
    g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
    int n = static_cast<int>(g.vertices.size());
    g.out.assign(n, {});
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (ts.allows(g.vertices[a], g.vertices[b])) g.out[a].push_back(b);
        }
    }
    auto [comp, count] = strongly_connected(g.out);
    g.scc = std::move(comp);
    g.scc_count = count;
    bool single = (count == 1);
    bool has_cycle_edge = n >= 2 || (n == 1 && !g.out[0].empty());
    g.irreducible = single && has_cycle_edge;
    return g;
}

namespace {

// successors of u not exceeding the ceiling, via the ordered enumerator
template <class F>
void for_capped_successors(const TransitionSystem& ts, Symbol u, Symbol ceiling, F&& fn) {
    Symbol after = -1;
    while (true) {
        auto nxt = ts.next_successor(u, after);
        if (!nxt || *nxt > ceiling) return;
        if (fn(*nxt)) return;
        after = *nxt;
    }
}

// Shortest connecting-word length with intermediate symbols <= ceiling,
// or -1. Length counts the intermediate symbols only.
int shortest_length(const TransitionSystem& ts, Symbol i, Symbol j, Symbol ceiling,
                    int max_length) {
    std::vector<int> dist(static_cast<std::size_t>(ceiling) + 1, -1);
    std::deque<Symbol> queue;
    for_capped_successors(ts, i, ceiling, [&](Symbol u) {
        dist[static_cast<std::size_t>(u)] = 1;
        queue.push_back(u);
        return false;
    });
    while (!queue.empty()) {
        Symbol u = queue.front();
        queue.pop_front();
        int d = dist[static_cast<std::size_t>(u)];
        if (ts.allows(u, j)) return d;
        if (d >= max_length) continue;
        for_capped_successors(ts, u, ceiling, [&](Symbol v) {
            if (dist[static_cast<std::size_t>(v)] == -1) {
                dist[static_cast<std::size_t>(v)] = d + 1;
                queue.push_back(v);
            }
            return false;
        });
    }
    return -1;
}

// Lexicographically smallest word of exactly `len` symbols <= ceiling with
// i.w.j allowable. reach[t][u]: a length-t completion from u to j exists.
Word lex_smallest_word(const TransitionSystem& ts, Symbol i, Symbol j, Symbol ceiling, int len) {
    std::size_t m = static_cast<std::size_t>(ceiling) + 1;
    std::vector<std::vector<char>> reach(static_cast<std::size_t>(len) + 1,
                                         std::vector<char>(m, 0));
    for (Symbol u = 0; u <= ceiling; ++u) {
        reach[1][static_cast<std::size_t>(u)] = ts.allows(u, j) ? 1 : 0;
    }
    for (int t = 2; t <= len; ++t) {
        for (Symbol u = 0; u <= ceiling; ++u) {
            for_capped_successors(ts, u, ceiling, [&](Symbol v) {
                if (reach[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(v)]) {
                    reach[static_cast<std::size_t>(t)][static_cast<std::size_t>(u)] = 1;
                    return true;
                }
                return false;
            });
        }
    }
    Word w;
    Symbol cur = i;
    for (int t = len; t >= 1; --t) {
        bool found = false;
        for_capped_successors(ts, cur, ceiling, [&](Symbol v) {
            if (reach[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)]) {
                w.push_back(v);
                cur = v;
                found = true;
                return true;
            }
            return false;
        });
        if (!found) throw internal_error("connect: reachability table inconsistent");
    }
    return w;
}

} // namespace

Word connect(const TransitionSystem& ts, Symbol i, Symbol j, const ConnectPolicy& policy) {
    if (i < 0 || j < 0) throw precondition_error("negative symbol");
    if (ts.allows(i, j)) return {};
    // the least workable ceiling: grow exponentially, then bisect
    // (reachability is monotone in the ceiling)
    auto length_at = [&](Symbol ceiling) {
        return shortest_length(ts, i, j, ceiling, policy.max_length);
    };
    Symbol feasible = -1;
    Symbol last_infeasible = -1;
    for (Symbol probe = 0;; probe = probe == 0 ? 1 : probe * 2) {
        if (probe > policy.max_ceiling) probe = policy.max_ceiling;
        if (length_at(probe) > 0) {
            feasible = probe;
            break;
        }
        last_infeasible = probe;
        if (probe == policy.max_ceiling) break;
    }
    if (feasible < 0) {
        throw budget_error("connect(" + std::to_string(i) + ", " + std::to_string(j) +
                           ") exhausted its budget (ceiling " +
                           std::to_string(policy.max_ceiling) + ", length " +
                           std::to_string(policy.max_length) + ")");
    }
    Symbol lo = last_infeasible + 1, hi = feasible;
    while (lo < hi) {
        Symbol mid = lo + (hi - lo) / 2;
        if (length_at(mid) > 0) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lex_smallest_word(ts, i, j, lo, length_at(lo));
}

std::size_t WeightedGraph::edge_count() const {
    std::size_t n = 0;
    for (const auto& row : out) n += row.size();
    return n;
}

Word WeightedGraph::spell_cycle(const std::vector<int>& cycle) const {
    Word w;
    w.reserve(cycle.size());
    for (int v : cycle) w.push_back(vertex_words[static_cast<std::size_t>(v)].front());
    return w;
}

WeightedGraph lift(const FiniteGraph& g, const Potential& p) {
    if (g.vertices.empty()) throw precondition_error("lift of an empty graph");
    const int k = p.memory();
    WeightedGraph wg;
    wg.memory = k;

    if (k == 1) {
        for (Symbol s : g.vertices) wg.vertex_words.push_back({s});
        wg.out.assign(wg.vertex_words.size(), {});
        for (std::size_t a = 0; a < g.vertices.size(); ++a) {
            Rational weight = p.eval(wg.vertex_words[a]);
            for (int b : g.out[a]) wg.out[a].push_back({b, weight});
        }
        return wg;
    }

    // enumerate allowable (k-1)-words over the restriction, in lex order
    std::vector<Word> words;
    Word cur;
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == k - 1) {
            words.push_back(cur);
            return;
        }
        for (std::size_t b = 0; b < g.vertices.size(); ++b) {
            if (!cur.empty()) {
                int ia = g.index_of(cur.back());
                if (std::find(g.out[static_cast<std::size_t>(ia)].begin(),
                              g.out[static_cast<std::size_t>(ia)].end(),
                              static_cast<int>(b)) == g.out[static_cast<std::size_t>(ia)].end()) {
                    continue;
                }
            }
            cur.push_back(g.vertices[b]);
            self(self);
            cur.pop_back();
        }
    };
    extend(extend);
    if (words.empty()) return wg; // flagged by emptiness

    std::map<Word, int> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);
    wg.vertex_words = words;
    wg.out.assign(words.size(), {});
    for (std::size_t a = 0; a < words.size(); ++a) {
        const Word& u = words[a];
        int ilast = g.index_of(u.back());
        for (int bv : g.out[static_cast<std::size_t>(ilast)]) {
            Symbol v = g.vertices[static_cast<std::size_t>(bv)];
            Word next(u.begin() + 1, u.end());
            next.push_back(v);
            auto it = index.find(next);
            if (it == index.end()) continue;
            Word fused = u;
            fused.push_back(v);
            wg.out[a].push_back({it->second, p.eval(fused)});
        }
    }
    return wg;
}

std::vector<std::vector<char>> bi_infinite_core(const WeightedGraph& g) {
    int n = static_cast<int>(g.vertex_count());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> radj(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        for (const auto& e : g.out[static_cast<std::size_t>(a)]) {
            adj[static_cast<std::size_t>(a)].push_back(e.to);
            radj[static_cast<std::size_t>(e.to)].push_back(a);
        }
    }
    auto [comp, count] = strongly_connected(adj);
    // vertices inside a component that carries a cycle
    std::vector<char> cyclic(static_cast<std::size_t>(n), 0);
    std::vector<int> comp_size(static_cast<std::size_t>(count), 0);
    for (int v = 0; v < n; ++v) ++comp_size[static_cast<std::size_t>(comp[v])];
    for (int v = 0; v < n; ++v) {
        if (comp_size[static_cast<std::size_t>(comp[v])] >= 2) {
            cyclic[static_cast<std::size_t>(v)] = 1;
        } else {
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (w == v) cyclic[static_cast<std::size_t>(v)] = 1;
            }
        }
    }
    auto flood = [n](const std::vector<std::vector<int>>& edges, std::vector<char> seen) {
        std::deque<int> queue;
        for (int v = 0; v < n; ++v) {
            if (seen[static_cast<std::size_t>(v)]) queue.push_back(v);
        }
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : edges[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
            }
        }
        return seen;
    };
    std::vector<char> from_cycle = flood(adj, cyclic);  // reachable from a cycle
    std::vector<char> to_cycle = flood(radj, cyclic);   // reaches a cycle

    std::vector<std::vector<char>> mask(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        mask[static_cast<std::size_t>(a)].resize(g.out[static_cast<std::size_t>(a)].size(), 0);
        for (std::size_t e = 0; e < g.out[static_cast<std::size_t>(a)].size(); ++e) {
            int b = g.out[static_cast<std::size_t>(a)][e].to;
            mask[static_cast<std::size_t>(a)][e] =
                from_cycle[static_cast<std::size_t>(a)] && to_cycle[static_cast<std::size_t>(b)];
        }
    }
    return mask;
}

} // namespace ergopt
