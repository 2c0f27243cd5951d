#pragma once

#include "ergopt/potential.hpp"
#include "ergopt/shift.hpp"

#include <vector>

namespace ergopt {

// Induced subgraph of the transition matrix on a finite symbol set, with a
// strongly-connected-component labeling. Irreducible means a single SCC
// covering every vertex and carrying at least one edge (no aperiodicity
// requirement).
struct FiniteGraph {
    std::vector<Symbol> vertices; // sorted
    std::vector<std::vector<int>> out; // local indices
    std::vector<int> scc; // component id per vertex
    int scc_count = 0;
    bool irreducible = false;

    int index_of(Symbol s) const;
    std::size_t edge_count() const;
    bool has_edge(Symbol a, Symbol b) const;
};

FiniteGraph restrict_to(const TransitionSystem& ts, const std::vector<Symbol>& symbols);

// Tarjan over a plain adjacency list; each component's vertex list comes
// back sorted ascending.
std::vector<std::vector<int>> scc_components(const std::vector<std::vector<int>>& adj);

// search limits for connecting-word searches over the countable graph
struct ConnectPolicy {
    Symbol max_ceiling = 4096; // largest symbol a connecting word may use
    int max_length = 4096;     // longest connecting word considered
};

// Canonical word w making i.w.j allowable, minimal under (max symbol used,
// then length, then lexicographic). Empty exactly when A(i, j) = 1.
// Iterative deepening over the symbol ceiling; throws budget_error when the
// policy is exhausted (impossible for a truly irreducible system with
// sufficient budget).
Word connect(const TransitionSystem& ts, Symbol i, Symbol j, const ConnectPolicy& policy = {});

// Finite subshift lifted to a weighted digraph: vertices are the allowable
// (k-1)-words (the symbols themselves when k = 1), an edge advances the
// window one step and carries f of the fused k-word. Cycles correspond
// bijectively to cyclically allowable periodic words and the cycle mean
// equals the orbit average.
struct WeightedGraph {
    int memory = 1;
    std::vector<Word> vertex_words;
    struct Edge {
        int to;
        Rational weight;
    };
    std::vector<std::vector<Edge>> out;

    std::size_t vertex_count() const { return vertex_words.size(); }
    std::size_t edge_count() const;
    bool empty() const { return vertex_words.empty(); }

    // the periodic symbol word spelled by a cycle given as vertex indices
    Word spell_cycle(const std::vector<int>& cycle) const;
};

WeightedGraph lift(const FiniteGraph& g, const Potential& p);

// Edge mask for edges lying on some bi-infinite path (source reachable from
// a cycle, target reaching a cycle). On an irreducible graph this is all of
// them; it matters only for hosts with dead ends.
std::vector<std::vector<char>> bi_infinite_core(const WeightedGraph& g);

} // namespace ergopt
