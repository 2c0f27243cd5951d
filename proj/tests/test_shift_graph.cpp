#include "ergopt/graph.hpp"
#include "ergopt/mmc.hpp"

#include <doctest.h>

#include <random>

using namespace ergopt;

TEST_CASE("restrictions and their component structure") {
    TransitionSystem renewal{RenewalShift{}};
    FiniteGraph g0 = restrict_to(renewal, {0});
    CHECK(g0.vertices == std::vector<Symbol>{0});
    CHECK(g0.edge_count() == 1); // just the self-loop
    CHECK(g0.has_edge(0, 0));
    CHECK(g0.irreducible);

    TransitionSystem full{FullShift{}};
    FiniteGraph gf = restrict_to(full, {2, 5, 9});
    CHECK(gf.edge_count() == 9);
    CHECK(gf.irreducible);

    FiniteGraph g12 = restrict_to(renewal, {1, 2});
    CHECK(g12.edge_count() == 1);
    CHECK(g12.has_edge(1, 2));
    CHECK(!g12.irreducible);

    CHECK_THROWS_AS(restrict_to(renewal, {}), precondition_error);

    // irreducibility does not ask for aperiodicity: a bare 2-cycle counts
    FileShift two_cycle;
    two_cycle.support_max = 1;
    two_cycle.edges = {{0, 1}, {1, 0}};
    two_cycle.tail = RenewalShift{};
    TransitionSystem ts2(std::move(two_cycle));
    CHECK(restrict_to(ts2, {0, 1}).irreducible);
}

TEST_CASE("restriction is monotone in the symbol set") {
    TransitionSystem band{BandShift{2}};
    FiniteGraph small = restrict_to(band, {0, 1, 3});
    FiniteGraph large = restrict_to(band, {0, 1, 2, 3, 4});
    for (std::size_t a = 0; a < small.vertices.size(); ++a) {
        for (int b : small.out[a]) {
            CHECK(large.has_edge(small.vertices[a], small.vertices[static_cast<std::size_t>(b)]));
        }
    }
}

TEST_CASE("connecting words are canonical") {
    TransitionSystem renewal{RenewalShift{}};
    CHECK(connect(renewal, 0, 0).empty());
    CHECK(connect(renewal, 0, 2) == Word{1});
    CHECK(connect(renewal, 0, 4) == Word{1, 2, 3});
    CHECK(connect(renewal, 3, 0).empty());
    CHECK(connect(renewal, 2, 2) == Word{0, 1});

    TransitionSystem full{FullShift{}};
    CHECK(connect(full, 17, 3).empty());

    // determinism: identical calls, identical words
    for (int i = 0; i < 5; ++i) CHECK(connect(renewal, 0, 4) == Word{1, 2, 3});
}

TEST_CASE("connect results are allowable and respect the order") {
    TransitionSystem band{BandShift{1}};
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        Symbol i = static_cast<Symbol>(rng() % 6);
        Symbol j = static_cast<Symbol>(rng() % 6);
        Word w = connect(band, i, j);
        Word full_word{i};
        full_word.insert(full_word.end(), w.begin(), w.end());
        full_word.push_back(j);
        CHECK(band.allows_word(full_word));
        CHECK((w.empty() == band.allows(i, j)));
    }
}

TEST_CASE("connect reports budget exhaustion on a dead pair") {
    // two components that the tail rule cannot bridge
    FileShift fs;
    fs.support_max = 1;
    fs.edges = {{0, 0}, {1, 1}};
    fs.tail = BandShift{1};
    TransitionSystem ts(std::move(fs));
    CHECK_THROWS_AS(connect(ts, 0, 1, ConnectPolicy{8, 8}), budget_error);
}

TEST_CASE("successor enumerators agree with the predicate") {
    std::vector<TransitionSystem> systems;
    systems.emplace_back(FullShift{});
    systems.emplace_back(RenewalShift{});
    systems.emplace_back(BandShift{3});
    for (const auto& ts : systems) {
        for (Symbol i = 0; i < 8; ++i) {
            std::vector<Symbol> enumerated;
            Symbol after = -1;
            while (enumerated.size() < 30) {
                auto nxt = ts.next_successor(i, after);
                if (!nxt) break;
                CHECK(*nxt > after); // strictly increasing
                enumerated.push_back(*nxt);
                after = *nxt;
            }
            std::vector<Symbol> scanned;
            for (Symbol j = 0; j <= (enumerated.empty() ? 30 : enumerated.back()); ++j) {
                if (ts.allows(i, j)) scanned.push_back(j);
            }
            if (!enumerated.empty()) CHECK(enumerated == scanned);
        }
    }
}

TEST_CASE("lift with memory one") {
    TransitionSystem renewal{RenewalShift{}};
    Potential p(LinearPotential{Rational(1)});
    WeightedGraph wg = lift(restrict_to(renewal, {0}), p);
    REQUIRE(wg.vertex_count() == 1);
    REQUIRE(wg.out[0].size() == 1);
    CHECK(wg.out[0][0].weight == Rational(0));
}

TEST_CASE("lift with memory two advances a window") {
    TransitionSystem full{FullShift{}};
    Potential p(CappedDiffPotential{Rational(1), Rational(1)});
    WeightedGraph wg = lift(restrict_to(full, {0, 1}), p);
    // vertices are the (k-1)-words, edges carry f of the fused pair
    REQUIRE(wg.vertex_count() == 2);
    CHECK(wg.edge_count() == 4);
    bool checked = false;
    for (const auto& e : wg.out[0]) {
        if (wg.vertex_words[static_cast<std::size_t>(e.to)] == Word{1}) {
            CHECK(e.weight == Rational(-1)); // f(0, 1)
            checked = true;
        }
    }
    CHECK(checked);

    Potential c(ConstantPotential{Rational(3, 7)});
    WeightedGraph wc = lift(restrict_to(full, {0, 1, 2}), c);
    for (const auto& row : wc.out) {
        for (const auto& e : row) CHECK(e.weight == Rational(3, 7));
    }
}

TEST_CASE("a restriction without transitions lifts to a cycle-free graph") {
    TransitionSystem renewal{RenewalShift{}};
    Potential p(CappedDiffPotential{Rational(1), Rational(1)}); // memory 2
    WeightedGraph wg = lift(restrict_to(renewal, {1}), p); // 1 has no successor inside {1}
    CHECK(wg.vertex_count() == 1);
    CHECK(wg.edge_count() == 0);
    CHECK(!max_mean_cycle<Rational>(wg));
}

TEST_CASE("cycle means equal orbit averages") {
    TransitionSystem full{FullShift{}};
    Potential p(CappedDiffPotential{Rational(1), Rational(1)});
    WeightedGraph wg = lift(restrict_to(full, {0, 1, 2}), p);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        int len = 1 + static_cast<int>(rng() % 5);
        std::vector<int> cycle;
        for (int i = 0; i < len; ++i) cycle.push_back(static_cast<int>(rng() % 3));
        Rational total(0);
        for (int i = 0; i < len; ++i) {
            int from = cycle[static_cast<std::size_t>(i)];
            int to = cycle[static_cast<std::size_t>((i + 1) % len)];
            bool found = false;
            for (const auto& e : wg.out[static_cast<std::size_t>(from)]) {
                if (e.to == to) {
                    total += e.weight;
                    found = true;
                    break;
                }
            }
            REQUIRE(found);
        }
        Word spelled = wg.spell_cycle(cycle);
        CHECK(total / Rational(len) == orbit_average<Rational>(p, PeriodicOrbit(spelled)));
    }
}
