#include "ergopt/mmc.hpp"

#include <deque>

namespace ergopt::mmc_detail {

namespace {

// shortest distances from src inside adj; -1 where unreachable
std::vector<int> bfs(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (dist[static_cast<std::size_t>(w)] == -1) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

} // namespace

std::optional<std::vector<int>> canonical_cycle(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());

    // girth: shortest closed walk length, via BFS back to each start
    int girth = -1;
    for (int v = 0; v < n; ++v) {
        auto dist = bfs(adj, v);
        for (int u = 0; u < n; ++u) {
            if (dist[static_cast<std::size_t>(u)] < 0) continue;
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (w == v) {
                    int len = dist[static_cast<std::size_t>(u)] + 1;
                    if (girth < 0 || len < girth) girth = len;
                }
            }
        }
    }
    if (girth < 0) return std::nullopt;

    // A closed walk of girth length is automatically a simple cycle, so the
    // lexicographic greedy below needs no visited bookkeeping. Restricting
    // to vertices >= start keeps the start the smallest vertex on the cycle.
    for (int start = 0; start < n; ++start) {
        std::vector<std::vector<char>> reach(
            static_cast<std::size_t>(girth) + 1,
            std::vector<char>(static_cast<std::size_t>(n), 0));
        reach[0][static_cast<std::size_t>(start)] = 1;
        for (int t = 1; t <= girth; ++t) {
            for (int u = start; u < n; ++u) {
                for (int w : adj[static_cast<std::size_t>(u)]) {
                    if (w >= start && reach[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(w)]) {
                        reach[static_cast<std::size_t>(t)][static_cast<std::size_t>(u)] = 1;
                        break;
                    }
                }
            }
        }
        if (!reach[static_cast<std::size_t>(girth)][static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle{start};
        int cur = start;
        for (int t = girth; t >= 2; --t) {
            bool stepped = false;
            for (int w : adj[static_cast<std::size_t>(cur)]) {
                if (w >= start &&
                    reach[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(w)]) {
                    cycle.push_back(w);
                    cur = w;
                    stepped = true;
                    break;
                }
            }
            if (!stepped) throw internal_error("canonical_cycle: reach table inconsistent");
        }
        return cycle;
    }
    return std::nullopt;
}

} // namespace ergopt::mmc_detail
