#include "ergopt/reduction.hpp"

#include <doctest.h>

using namespace ergopt;

namespace {

Potential fixture_r() { return Potential(LinearPotential{Rational(1)}); }
Potential fixture_f2() { return Potential(CappedDiffPotential{Rational(1), Rational(1)}); }

} // namespace

TEST_CASE("coercivity cut from the tail certificate") {
    CHECK(coercivity_cut<Rational>(fixture_r(), Rational(0), Rational(1, 2)) == 1);
    CHECK(coercivity_cut<Rational>(fixture_f2(), Rational(0), Rational(1, 2)) == 1);
    Potential flat(ConstantPotential{Rational(0)});
    CHECK_THROWS_AS(coercivity_cut<Rational>(flat, Rational(0), Rational(1, 2)),
                    certification_error);
    CHECK_THROWS_AS(coercivity_cut<Rational>(fixture_r(), Rational(0), Rational(0)),
                    precondition_error);
}

TEST_CASE("least threshold walks the explicit region of a table potential") {
    TablePotential t;
    t.values = {{0, Rational(-5)}, {1, Rational(0)}, {2, Rational(-1)}};
    t.tail_intercept = Rational(0);
    t.tail_slope = Rational(1); // T(i) = -i from symbol 3 on
    Potential p(std::move(t));
    // below -1/2 must hold from the cut on: symbol 1 blocks anything lower
    CHECK(least_threshold<Rational>(p, Rational(-1, 2)) == 2);
    CHECK(least_threshold<Rational>(p, Rational(1)) == 0);
    CHECK(least_threshold<Rational>(p, Rational(-2)) == 3);
}

TEST_CASE("hull construction on the renewal shift") {
    TransitionSystem renewal{RenewalShift{}};
    AlphabetHull h1 = build_hull(renewal, 1);
    CHECK(h1.base == std::vector<Symbol>{0});
    CHECK(h1.connector(0, 0).empty());
    CHECK(h1.symbols == std::vector<Symbol>{0});
    CHECK(h1.max_connector_len == 0);

    AlphabetHull h3 = build_hull(renewal, 3);
    CHECK(h3.connector(0, 2) == Word{1});
    CHECK(h3.connector(1, 0).empty());
    CHECK(h3.connector(2, 2) == Word{0, 1});
    CHECK(h3.max_connector_len == 2);
    CHECK(h3.symbols == std::vector<Symbol>{0, 1, 2});

    TransitionSystem full{FullShift{}};
    AlphabetHull hf = build_hull(full, 3);
    CHECK(hf.max_connector_len == 0);
    CHECK(hf.symbols == std::vector<Symbol>{0, 1, 2});
    for (const auto& [pair, word] : hf.table) CHECK(word.empty());

    CHECK_THROWS_AS(build_hull(renewal, 0), precondition_error);
}

TEST_CASE("splice constants from certified bounds") {
    // renewal at cut 1: no connectors, zero minimum, zero variation
    auto c1 = splice_constants<Rational>(Rational(0), 0, Rational(0), Rational(0), Rational(1, 2),
                                         Rational(0));
    CHECK(c1.c_word == Rational(0));
    CHECK(c1.c_direct == Rational(-1, 2));
    CHECK(c1.c_min == Rational(-1, 2));

    // the capped-difference fixture: unit variation
    auto c2 = splice_constants<Rational>(Rational(0), 0, Rational(0), Rational(0), Rational(1, 2),
                                         Rational(1));
    CHECK(c2.c_word == Rational(-2));
    CHECK(c2.c_direct == Rational(-3, 2));
    CHECK(c2.c_min == Rational(-2));

    // one-step connector with a unit minimum
    auto c3 = splice_constants<Rational>(Rational(-1), 1, Rational(0), Rational(0), Rational(1, 2),
                                         Rational(0));
    CHECK(c3.c_word == Rational(-1));

    CHECK_THROWS_AS(splice_constants<Rational>(Rational(0), 0, Rational(-2), Rational(1),
                                               Rational(1, 2), Rational(0)),
                    precondition_error);
}

TEST_CASE("minimum over the reduced subshift") {
    TransitionSystem renewal{RenewalShift{}};
    Potential r = fixture_r();
    CHECK(min_over_subshift(r, build_hull(renewal, 1), renewal) == Rational(0));

    TransitionSystem full{FullShift{}};
    Potential c(ConstantPotential{Rational(5, 2)});
    CHECK(min_over_subshift(c, build_hull(full, 2), full) == Rational(5, 2));

    Potential g = fixture_f2();
    CHECK(min_over_subshift(g, build_hull(full, 2), full) == Rational(-2)); // f(1, 0)

    // a hand-made hull whose restriction has no cycle is rejected
    AlphabetHull dead;
    dead.cut = 0;
    dead.symbols = {1, 2}; // renewal only allows 1 -> 2 here
    CHECK_THROWS_AS(min_over_subshift(r, dead, renewal), construction_error);
}

TEST_CASE("reduce on the renewal fixture reproduces the hand execution") {
    TransitionSystem renewal{RenewalShift{}};
    Reduction<Rational> red = reduce<Rational>(fixture_r(), renewal, Rational(1, 2));
    CHECK(red.cut1 == 1);
    CHECK(red.hull1.symbols == std::vector<Symbol>{0});
    CHECK(red.hull1.max_connector_len == 0);
    CHECK(red.min_f_hull1 == Rational(0));
    CHECK(red.c_word == Rational(0));
    CHECK(red.c_direct == Rational(-1, 2));
    CHECK(red.c_min == Rational(-1, 2));
    CHECK(red.cut2 == 1);
    CHECK(red.hull2.symbols == std::vector<Symbol>{0});
    CHECK(red.tail_gap == Rational(1, 2));
    CHECK(red.certified);
}

TEST_CASE("reduce on the capped-difference fixture") {
    TransitionSystem full{FullShift{}};
    Reduction<Rational> red = reduce<Rational>(fixture_f2(), full, Rational(1, 2));
    CHECK(red.cut1 == 1);
    CHECK(red.hull1.symbols == std::vector<Symbol>{0});
    CHECK(red.c_word == Rational(-2));
    CHECK(red.c_direct == Rational(-3, 2));
    CHECK(red.c_min == Rational(-2));
    CHECK(red.cut2 == 3);
    CHECK(red.hull2.symbols == std::vector<Symbol>{0, 1, 2});
    CHECK(red.tail_gap == Rational(1));
    CHECK(red.certified);
}

TEST_CASE("caller-supplied thresholds reproduce the automatic reduction") {
    TransitionSystem renewal{RenewalShift{}};
    ReducePolicy policy;
    policy.user_cut1 = 1;
    policy.user_cut2 = 1;
    Reduction<Rational> red = reduce<Rational>(fixture_r(), renewal, Rational(1, 2), policy);
    CHECK(red.cut1 == 1);
    CHECK(red.cut2 == 1);
    CHECK(red.c_min == Rational(-1, 2));
    CHECK(red.tail_gap == Rational(1, 2));
    CHECK(red.certified);

    // a cut2 the certificate cannot confirm leaves the record uncertified
    TransitionSystem full{FullShift{}};
    Potential flat(ConstantPotential{Rational(3)});
    ReducePolicy p2;
    p2.user_cut1 = 1;
    p2.user_cut2 = 2;
    Reduction<Rational> weak = reduce<Rational>(flat, full, Rational(1, 2), p2);
    CHECK(!weak.certified);
    CHECK(!(Rational(0) < weak.tail_gap));
}

TEST_CASE("automatic mode on a non-coercive potential refuses to certify") {
    TransitionSystem full{FullShift{}};
    Potential flat(ConstantPotential{Rational(0)});
    CHECK_THROWS_AS(reduce<Rational>(flat, full, Rational(1, 2)), certification_error);
}

TEST_CASE("reduction invariants hold beyond the second cut") {
    TransitionSystem full{FullShift{}};
    Potential g = fixture_f2();
    Reduction<Rational> red = reduce<Rational>(g, full, Rational(1, 2));
    for (Symbol s : red.hull1.symbols) CHECK(red.hull2.contains(s));
    for (Symbol j = red.cut1; j < red.cut1 + 50; ++j) {
        CHECK(cylinder_sup_query(g, j) < red.beta_lb - red.epsilon);
    }
    for (Symbol j = red.cut2; j < red.cut2 + 50; ++j) {
        CHECK(!(red.c_min - red.tail_gap < cylinder_sup_query(g, j)));
    }
}

TEST_CASE("conservative bounds only widen the cuts") {
    Potential g = fixture_f2();
    // lower beta_lb never shrinks the first cut
    Symbol tight = coercivity_cut<Rational>(g, Rational(0), Rational(1, 2));
    Symbol loose = coercivity_cut<Rational>(g, Rational(-3), Rational(1, 2));
    CHECK(tight <= loose);
    // larger abs bound never raises c_word when a connector exists
    auto a = splice_constants<Rational>(Rational(-1), 2, Rational(0), Rational(0), Rational(1, 2),
                                        Rational(1));
    auto b = splice_constants<Rational>(Rational(-1), 2, Rational(0), Rational(5), Rational(1, 2),
                                        Rational(1));
    CHECK(!(a.c_word < b.c_word));
}

TEST_CASE("refinement tightens the cuts when the first witness cycle is weak") {
    // the best orbit (0 1 2) is invisible in the starting truncation {0},
    // so the unrefined pass works from beta_lb = -1 instead of -2/3
    TransitionSystem renewal{RenewalShift{}};
    TablePotential t;
    t.values = {{0, Rational(-1)}, {1, Rational(-1)}, {2, Rational(0)}};
    t.tail_intercept = Rational(0);
    t.tail_slope = Rational(1);
    Potential p(std::move(t));

    Reduction<Rational> plain = reduce<Rational>(p, renewal, Rational(1, 2));
    CHECK(plain.beta_lb == Rational(-1));
    CHECK(plain.cut1 == 3);
    CHECK(plain.cut2 == 4);
    CHECK(plain.tail_gap == Rational(1));

    ReducePolicy refine;
    refine.refine = true;
    Reduction<Rational> tight = reduce<Rational>(p, renewal, Rational(1, 2), refine);
    CHECK(tight.beta_lb == Rational(-2, 3)); // the solved value on the first hull
    CHECK(tight.cut1 == 3);
    CHECK(tight.cut2 == 3);
    CHECK(tight.tail_gap == Rational(1, 3));
    CHECK(tight.certified);
}

TEST_CASE("refinement is idempotent on solved fixtures") {
    TransitionSystem renewal{RenewalShift{}};
    ReducePolicy refine;
    refine.refine = true;
    Reduction<Rational> a = reduce<Rational>(fixture_r(), renewal, Rational(1, 2), refine);
    Reduction<Rational> b = reduce<Rational>(fixture_r(), renewal, Rational(1, 2), refine);
    CHECK(a.cut1 == b.cut1);
    CHECK(a.cut2 == b.cut2);
    CHECK(a.c_min == b.c_min);
    CHECK(a.tail_gap == b.tail_gap);
    Reduction<Rational> bare = reduce<Rational>(fixture_r(), renewal, Rational(1, 2));
    CHECK(a.cut2 == bare.cut2);
    CHECK(a.tail_gap == bare.tail_gap);
}
