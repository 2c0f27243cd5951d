#pragma once

#include "ergopt/graph.hpp"
#include "ergopt/numeric.hpp"

#include <optional>
#include <vector>

namespace ergopt {

template <class S>
struct MmcResult {
    S value;
    std::vector<int> cycle; // vertex indices, one full turn, starts at its smallest vertex
};

namespace mmc_detail {

template <class S>
struct EdgeView {
    int from;
    int to;
    S weight;
};

template <class S>
std::vector<EdgeView<S>> edges_of(const WeightedGraph& g) {
    std::vector<EdgeView<S>> edges;
    for (int a = 0; a < static_cast<int>(g.vertex_count()); ++a) {
        for (const auto& e : g.out[static_cast<std::size_t>(a)]) {
            edges.push_back({a, e.to, num<S>::from(e.weight)});
        }
    }
    return edges;
}

// Karp's dynamic program on one strongly connected component (max form):
// best weight of an exactly-k-edge walk from a fixed source, k = 0..m,
// then max over targets of the min ratio.
template <class S>
std::optional<S> component_max_mean(const std::vector<int>& members,
                                    const std::vector<EdgeView<S>>& edges) {
    int m = static_cast<int>(members.size());
    int max_v = 0;
    for (int v : members) max_v = std::max(max_v, v);
    std::vector<int> slot(static_cast<std::size_t>(max_v) + 1, -1);
    for (int i = 0; i < m; ++i) slot[static_cast<std::size_t>(members[i])] = i;

    std::vector<EdgeView<S>> internal;
    for (const auto& e : edges) {
        if (e.from <= max_v && e.to <= max_v && slot[static_cast<std::size_t>(e.from)] >= 0 &&
            slot[static_cast<std::size_t>(e.to)] >= 0) {
            internal.push_back({slot[static_cast<std::size_t>(e.from)],
                                slot[static_cast<std::size_t>(e.to)], e.weight});
        }
    }
    if (internal.empty()) return std::nullopt;

    std::vector<std::vector<S>> d(static_cast<std::size_t>(m) + 1,
                                  std::vector<S>(static_cast<std::size_t>(m), num<S>::zero()));
    std::vector<std::vector<char>> def(static_cast<std::size_t>(m) + 1,
                                       std::vector<char>(static_cast<std::size_t>(m), 0));
    def[0][0] = 1; // source = members[0]
    for (int k = 1; k <= m; ++k) {
        for (const auto& e : internal) {
            if (!def[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(e.from)]) continue;
            S cand = d[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(e.from)] + e.weight;
            auto& dk = d[static_cast<std::size_t>(k)][static_cast<std::size_t>(e.to)];
            auto& fk = def[static_cast<std::size_t>(k)][static_cast<std::size_t>(e.to)];
            if (!fk || dk < cand) {
                dk = cand;
                fk = 1;
            }
        }
    }

    std::optional<S> best;
    for (int v = 0; v < m; ++v) {
        if (!def[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)]) continue;
        std::optional<S> inner;
        for (int k = 0; k < m; ++k) {
            if (!def[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)]) continue;
            S ratio = (d[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)] -
                       d[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)]) /
                      num<S>::from(Rational(m - k));
            if (!inner || ratio < *inner) inner = ratio;
        }
        if (inner && (!best || *best < *inner)) best = inner;
    }
    return best;
}

// Canonical cycle in a boolean subgraph all of whose cycles attain the
// optimum: shortest length first, then lexicographically smallest vertex
// sequence started at its smallest vertex.
std::optional<std::vector<int>> canonical_cycle(const std::vector<std::vector<int>>& adj);

} // namespace mmc_detail

// Maximum cycle mean plus one attaining cycle; nullopt when the graph has
// no cycle. Exact in rational mode; runs Karp per strongly connected
// component on the shared dynamic program above.
template <class S>
std::optional<MmcResult<S>> max_mean_cycle(const WeightedGraph& g) {
    if (g.empty()) return std::nullopt;
    int n = static_cast<int>(g.vertex_count());
    auto edges = mmc_detail::edges_of<S>(g);
    if (edges.empty()) return std::nullopt;

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& e : edges) adj[static_cast<std::size_t>(e.from)].push_back(e.to);

    std::optional<S> best;
    for (const auto& members : scc_components(adj)) {
        auto lambda = mmc_detail::component_max_mean<S>(members, edges);
        if (lambda && (!best || *best < *lambda)) best = lambda;
    }
    if (!best) return std::nullopt;

    // Every optimal cycle is tight for a fixed point h of the shifted
    // Bellman relaxation, and every tight cycle is optimal; pick the
    // canonical one inside the tight subgraph.
    S margin = num<S>::zero();
    for (int widen = 0; widen < 8; ++widen) {
        std::vector<S> h(static_cast<std::size_t>(n), num<S>::zero());
        for (int round = 0; round < n + 1; ++round) {
            for (const auto& e : edges) {
                S cand = h[static_cast<std::size_t>(e.from)] + e.weight - *best;
                if (h[static_cast<std::size_t>(e.to)] < cand) {
                    h[static_cast<std::size_t>(e.to)] = cand;
                }
            }
        }
        std::vector<std::vector<int>> tight(static_cast<std::size_t>(n));
        for (const auto& e : edges) {
            S slack = h[static_cast<std::size_t>(e.from)] + e.weight - *best -
                      h[static_cast<std::size_t>(e.to)];
            if (num<S>::abs(slack) <= margin) {
                tight[static_cast<std::size_t>(e.from)].push_back(e.to);
            }
        }
        for (auto& row : tight) std::sort(row.begin(), row.end());
        if (auto cyc = mmc_detail::canonical_cycle(tight)) {
            return MmcResult<S>{*best, *cyc};
        }
        if constexpr (num<S>::mode == Mode::rational) {
            throw internal_error("tight subgraph lost the optimal cycle");
        } else {
            // widen the tightness window and retry (doubles only)
            margin = (margin == 0.0) ? std::ldexp(1.0, -36) : margin * 1024.0;
        }
    }
    throw internal_error("max_mean_cycle: cycle extraction failed");
}

// Independent oracle: enumerate all simple cycles up to max_len by DFS
// anchored at each cycle's smallest vertex, track the best mean with the
// same tie-break as the solver. Exact optimum when max_len >= vertex count
// (a maximum-mean cycle may always be taken simple).
template <class S>
std::optional<MmcResult<S>> brute_force_mmc(const WeightedGraph& g, int max_len) {
    if (max_len < 1) throw precondition_error("brute_force_mmc needs max_len >= 1");
    if (g.empty()) return std::nullopt;
    int n = static_cast<int>(g.vertex_count());

    std::optional<MmcResult<S>> best;
    std::vector<int> path;
    auto consider = [&](const S& total) {
        S mean = total / num<S>::from(Rational(static_cast<std::int64_t>(path.size())));
        if (!best || best->value < mean ||
            (best->value == mean && (path.size() < best->cycle.size() ||
                                     (path.size() == best->cycle.size() && path < best->cycle)))) {
            best = MmcResult<S>{mean, path};
        }
    };

    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int anchor = 0; anchor < n; ++anchor) {
        path.assign(1, anchor);
        used.assign(static_cast<std::size_t>(n), 0);
        used[static_cast<std::size_t>(anchor)] = 1;
        auto dfs = [&](auto&& self, int v, S total) -> void {
            for (const auto& e : g.out[static_cast<std::size_t>(v)]) {
                if (e.to == anchor) consider(total + num<S>::from(e.weight));
                if (e.to <= anchor || used[static_cast<std::size_t>(e.to)]) continue;
                if (static_cast<int>(path.size()) >= max_len) continue;
                used[static_cast<std::size_t>(e.to)] = 1;
                path.push_back(e.to);
                self(self, e.to, total + num<S>::from(e.weight));
                path.pop_back();
                used[static_cast<std::size_t>(e.to)] = 0;
            }
        };
        dfs(dfs, anchor, num<S>::zero());
    }
    return best;
}

} // namespace ergopt
