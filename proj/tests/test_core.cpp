#include "ergopt/potential.hpp"
#include "ergopt/shift.hpp"

#include <doctest.h>

#include <random>

using namespace ergopt;

namespace {

Potential renewal_linear() {
    return Potential(LinearPotential{Rational(1)}); // f = -x0
}

Potential f2() {
    return Potential(CappedDiffPotential{Rational(1), Rational(1)});
}

} // namespace

TEST_CASE("potential evaluation on cylinders") {
    Potential r = renewal_linear();
    CHECK(eval_potential(r, Word{3}) == Rational(-3));
    CHECK(eval_potential(r, Word{3, 7, 1}) == Rational(-3)); // memory 1 ignores the rest

    Potential c(ConstantPotential{Rational(5, 3)});
    CHECK(eval_potential(c, Word{0}) == Rational(5, 3));
    CHECK(eval_potential(c, Word{9, 9}) == Rational(5, 3));

    Potential g = f2();
    CHECK(eval_potential(g, Word{0, 2}) == Rational(-1));
    CHECK(eval_potential(g, Word{0, 0}) == Rational(0));
    CHECK(eval_potential(g, Word{1, 0}) == Rational(-2));

    CHECK_THROWS_AS(eval_potential(g, Word{0}), precondition_error); // shorter than memory

    // validating form rejects prefixes the transition matrix forbids
    TransitionSystem renewal{RenewalShift{}};
    CHECK(eval_potential(g, Word{0, 1}, renewal) == Rational(-1));
    CHECK_THROWS_AS(eval_potential(g, Word{2, 1}, renewal), precondition_error);
}

TEST_CASE("birkhoff sums over periodic extensions") {
    Potential r = renewal_linear();
    PeriodicOrbit x01(Word{0, 1});
    CHECK(birkhoff_sum<Rational>(r, x01, 0, 2) == Rational(-1));

    Potential c(ConstantPotential{Rational(7, 2)});
    PeriodicOrbit any(Word{0, 0, 1});
    CHECK(birkhoff_sum<Rational>(c, any, 0, 8) == Rational(8) * Rational(7, 2));

    PeriodicOrbit x012(Word{0, 1, 2});
    CHECK(birkhoff_sum<Rational>(r, x012, 1, 3) == Rational(-3)); // -1 -2 + 0

    CHECK_THROWS_AS(birkhoff_sum<Rational>(r, x01, 0, 0), precondition_error);
}

TEST_CASE("orbit averages") {
    Potential r = renewal_linear();
    CHECK(orbit_average<Rational>(r, PeriodicOrbit(Word{0, 1})) == Rational(-1, 2));
    CHECK(orbit_average<Rational>(r, PeriodicOrbit(Word{0})) == Rational(0));
    Potential c(ConstantPotential{Rational(-4, 5)});
    CHECK(orbit_average<Rational>(c, PeriodicOrbit(Word{2, 0, 0})) == Rational(-4, 5));
}

TEST_CASE("cylinder sup queries") {
    Potential r = renewal_linear();
    CHECK(cylinder_sup_query(r, 3) == Rational(-3));
    Potential c(ConstantPotential{Rational(2)});
    CHECK(cylinder_sup_query(c, 123) == Rational(2));
    Potential g = f2();
    CHECK(cylinder_sup_query(g, 5) == Rational(-5)); // attained with x1 = x0
}

TEST_CASE("starts_in is the smallest symbol") {
    CHECK(starts_in(PeriodicOrbit(Word{0, 1, 2})) == 0);
    CHECK(starts_in(PeriodicOrbit(Word{7})) == 7);
    CHECK(starts_in(PeriodicOrbit(Word{3, 5, 4})) == 3);
}

TEST_CASE("orbit normalization: primitive word, minimal rotation") {
    CHECK(PeriodicOrbit(Word{0, 1, 0, 1}) == PeriodicOrbit(Word{0, 1}));
    CHECK(PeriodicOrbit(Word{1, 0}) == PeriodicOrbit(Word{0, 1}));
    CHECK(PeriodicOrbit(Word{2, 0, 1}).word() == Word{0, 1, 2});
    CHECK(PeriodicOrbit(Word{5, 5, 5}).word() == Word{5});
    CHECK_THROWS_AS(PeriodicOrbit(Word{}), precondition_error);
    CHECK_THROWS_AS(PeriodicOrbit(Word{-1}), precondition_error);
}

TEST_CASE("rotation invariance and sum scaling") {
    Potential g = f2();
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        Word w;
        for (int i = 0; i < n; ++i) w.push_back(static_cast<Symbol>(rng() % 5));
        PeriodicOrbit x(w);
        Rational avg = orbit_average<Rational>(g, x);
        for (int rot = 0; rot < n; ++rot) {
            Word r(w.begin() + rot, w.end());
            r.insert(r.end(), w.begin(), w.begin() + rot);
            CHECK(orbit_average<Rational>(g, PeriodicOrbit(r)) == avg);
        }
        int reps = 1 + static_cast<int>(rng() % 4);
        CHECK(birkhoff_sum<Rational>(g, x, 0, reps * x.period()) ==
              Rational(reps) * birkhoff_sum<Rational>(g, x, 0, x.period()));
    }
}

TEST_CASE("sampled windows never beat the cylinder sup") {
    Potential g = f2();
    Potential r = renewal_linear();
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        Word w{static_cast<Symbol>(rng() % 9), static_cast<Symbol>(rng() % 9)};
        CHECK(!(cylinder_sup_query(g, w[0]) < eval_potential(g, w)));
        CHECK(!(cylinder_sup_query(r, w[0]) < eval_potential(r, w)));
    }
}

TEST_CASE("tail certificates are nonincreasing and unbounded below") {
    Potential g = f2();
    Rational prev = g.tail_value(0);
    for (Symbol i = 1; i < 200; ++i) {
        Rational cur = g.tail_value(i);
        CHECK(!(prev < cur));
        prev = cur;
    }
    CHECK(g.tail_value(1000) < Rational(-999));
}

TEST_CASE("measure weights are uniform and sum to one") {
    PeriodicMeasure mu{PeriodicOrbit(Word{0, 0, 1})};
    auto w = mu.weights();
    REQUIRE(w.size() == 3);
    Rational total(0);
    for (const auto& x : w) {
        CHECK(x == Rational(1, 3));
        total += x;
    }
    CHECK(total == Rational(1));
    Potential r = renewal_linear();
    CHECK(integrate(mu, r) == Rational(-1, 3));
}
