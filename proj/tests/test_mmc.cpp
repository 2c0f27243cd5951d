#include "ergopt/mmc.hpp"
#include "ergopt/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace ergopt;

namespace {

WeightedGraph graph_from(int n, const std::vector<std::tuple<int, int, Rational>>& edges) {
    WeightedGraph g;
    g.memory = 1;
    for (int v = 0; v < n; ++v) g.vertex_words.push_back({v});
    g.out.assign(static_cast<std::size_t>(n), {});
    for (const auto& [a, b, w] : edges) g.out[static_cast<std::size_t>(a)].push_back({b, w});
    return g;
}

template <class S>
S cycle_mean(const WeightedGraph& g, const std::vector<int>& cycle) {
    S total = num<S>::zero();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
        bool found = false;
        for (const auto& e : g.out[static_cast<std::size_t>(from)]) {
            if (e.to == to) {
                total = total + num<S>::from(e.weight);
                found = true;
                break;
            }
        }
        REQUIRE(found);
    }
    return total / num<S>::from(Rational(static_cast<std::int64_t>(cycle.size())));
}

} // namespace

TEST_CASE("max mean cycle on tiny graphs") {
    auto g1 = graph_from(1, {{0, 0, Rational(0)}});
    auto r1 = max_mean_cycle<Rational>(g1);
    REQUIRE(r1);
    CHECK(r1->value == Rational(0));
    CHECK(r1->cycle == std::vector<int>{0});

    auto g2 = graph_from(2, {{0, 0, Rational(0)}, {0, 1, Rational(2)}, {1, 0, Rational(-3)}});
    auto r2 = max_mean_cycle<Rational>(g2);
    REQUIRE(r2);
    CHECK(r2->value == Rational(0));
    CHECK(r2->cycle == std::vector<int>{0});

    auto g3 = graph_from(2, {{0, 0, Rational(2)}, {0, 1, Rational(5)}, {1, 0, Rational(1)}});
    auto r3 = max_mean_cycle<Rational>(g3);
    REQUIRE(r3);
    CHECK(r3->value == Rational(3));
    CHECK(r3->cycle == std::vector<int>{0, 1});
}

TEST_CASE("brute force oracle on the same graphs") {
    auto g1 = graph_from(1, {{0, 0, Rational(0)}});
    CHECK(brute_force_mmc<Rational>(g1, 1)->value == Rational(0));

    auto g2 = graph_from(2, {{0, 0, Rational(0)}, {0, 1, Rational(2)}, {1, 0, Rational(-3)}});
    CHECK(brute_force_mmc<Rational>(g2, 2)->value == Rational(0));

    auto g3 = graph_from(2, {{0, 0, Rational(2)}, {0, 1, Rational(5)}, {1, 0, Rational(1)}});
    CHECK(brute_force_mmc<Rational>(g3, 2)->value == Rational(3));

    // complete graph on two symbols, constant weights: any self-loop wins
    auto gc = graph_from(2, {{0, 0, Rational(4, 7)},
                             {0, 1, Rational(4, 7)},
                             {1, 0, Rational(4, 7)},
                             {1, 1, Rational(4, 7)}});
    auto rc = brute_force_mmc<Rational>(gc, 2);
    CHECK(rc->value == Rational(4, 7));
    CHECK(rc->cycle == std::vector<int>{0});
}

TEST_CASE("renewal truncation lift has the fixed point as best cycle") {
    TransitionSystem renewal{RenewalShift{}};
    Potential p(LinearPotential{Rational(1)});
    WeightedGraph wg = lift(restrict_to(renewal, {0, 1, 2}), p);
    auto best = brute_force_mmc<Rational>(wg, 3);
    REQUIRE(best);
    CHECK(best->value == Rational(0));
    CHECK(wg.spell_cycle(best->cycle) == Word{0});
    auto karp = max_mean_cycle<Rational>(wg);
    REQUIRE(karp);
    CHECK(karp->value == Rational(0));
}

TEST_CASE("acyclic graphs report no cycle") {
    auto g = graph_from(3, {{0, 1, Rational(1)}, {1, 2, Rational(1)}});
    CHECK(!max_mean_cycle<Rational>(g));
    CHECK(!brute_force_mmc<Rational>(g, 3));
    WeightedGraph empty;
    CHECK(!max_mean_cycle<Rational>(empty));
}

TEST_CASE("ties break toward shorter then lexicographically smaller cycles") {
    // all cycles have mean 0; the self-loop at 2 is the shortest
    auto g = graph_from(3, {{0, 1, Rational(0)}, {1, 0, Rational(0)}, {2, 2, Rational(0)},
                            {0, 2, Rational(-9)}, {2, 0, Rational(-9)}});
    auto r = max_mean_cycle<Rational>(g);
    REQUIRE(r);
    CHECK(r->cycle == std::vector<int>{2});

    // equal length: prefer [0, 1] over [0, 2]
    auto h = graph_from(3, {{0, 1, Rational(0)}, {1, 0, Rational(0)}, {0, 2, Rational(0)},
                            {2, 0, Rational(0)}});
    auto rh = max_mean_cycle<Rational>(h);
    REQUIRE(rh);
    CHECK(rh->cycle == std::vector<int>{0, 1});
    auto bh = brute_force_mmc<Rational>(h, 3);
    REQUIRE(bh);
    CHECK(bh->cycle == std::vector<int>{0, 1});
}

TEST_CASE("oracle equivalence on random rational digraphs") {
    std::mt19937_64 rng(2024);
    int with_cycles = 0;
    for (int i = 0; i < 300; ++i) {
        WeightedGraph g = random_weighted_graph(rng, 8);
        auto fast = max_mean_cycle<Rational>(g);
        auto slow = brute_force_mmc<Rational>(g, static_cast<int>(g.vertex_count()));
        REQUIRE(fast.has_value() == slow.has_value());
        if (!fast) continue;
        ++with_cycles;
        CHECK(fast->value == slow->value);
        // both returned cycles must achieve the value
        CHECK(cycle_mean<Rational>(g, fast->cycle) == fast->value);
        CHECK(cycle_mean<Rational>(g, slow->cycle) == fast->value);
    }
    CHECK(with_cycles > 100);
}

TEST_CASE("float and rational runs agree to 1e-9 relative") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 150; ++i) {
        WeightedGraph g = random_weighted_graph(rng, 8);
        auto exact = max_mean_cycle<Rational>(g);
        auto approx = max_mean_cycle<double>(g);
        REQUIRE(exact.has_value() == approx.has_value());
        if (!exact) continue;
        double want = exact->value.to_double();
        CHECK(std::abs(approx->value - want) <= 1e-9 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("solver is deterministic") {
    std::mt19937_64 rng(5150);
    WeightedGraph g = random_weighted_graph(rng, 8);
    auto a = max_mean_cycle<Rational>(g);
    auto b = max_mean_cycle<Rational>(g);
    REQUIRE(a.has_value() == b.has_value());
    if (a) {
        CHECK(a->value == b->value);
        CHECK(a->cycle == b->cycle);
    }
}
