#include "ergopt/real_shift.hpp"

#include <doctest.h>

using namespace ergopt;

TEST_CASE("real reduction for the tent potential") {
    RealPotential p(AbsLinearReal{Rational(1), Rational(1)}); // f = -|x - 1|
    RealReduction red = reduce_real(p, Rational(1, 2), Rational(0));
    CHECK(red.cut1 == Rational(3, 2));
    CHECK(red.min_on_box == Rational(-1));
    CHECK(red.cut2_infimum == Rational(2));
    CHECK(red.margin == Rational(1, 500)); // 10^-3 times the threshold scale
    CHECK(red.cut2 == Rational(2) + red.margin);
}

TEST_CASE("real reduction for the linear potential") {
    RealPotential p(LinearReal{Rational(1)}); // f = -x
    RealReduction red = reduce_real(p, Rational(1), Rational(0));
    CHECK(red.cut1 == Rational(1));
    CHECK(red.min_on_box == Rational(-1));
    CHECK(red.cut2_infimum == Rational(1));
    CHECK(red.cut2 == Rational(1) + red.margin);
}

TEST_CASE("constant real potentials cannot be certified") {
    RealPotential p(ConstantReal{Rational(2)});
    CHECK_THROWS_AS(reduce_real(p, Rational(1, 2), Rational(2)), certification_error);
}

TEST_CASE("exact box minima and the certified grid bound") {
    RealPotential p(AbsLinearReal{Rational(1), Rational(1)});
    CHECK(p.box_min(Rational(0), Rational(3, 2)) == Rational(-1));
    CHECK(p.box_min(Rational(0), Rational(3)) == Rational(-2));
    CHECK(p.box_min(Rational(2), Rational(3)) == Rational(-2));
    for (int n : {3, 5, 9, 33}) {
        Rational certified = certified_grid_min(p, Rational(0), Rational(3, 2), n);
        CHECK(!(p.box_min(Rational(0), Rational(3, 2)) < certified)); // a true lower bound
    }
}

TEST_CASE("grid solve finds the interior fixed point") {
    RealPotential p(AbsLinearReal{Rational(1), Rational(1)});
    GridSolveResult g = grid_solve(p, Rational(2), 5);
    CHECK(g.beta_hat == Rational(0));
    CHECK(g.grid == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1),
                                          Rational(3, 2), Rational(2)});
    CHECK(g.orbit.word() == Word{2}); // the grid index of the point 1

    RealPotential c(ConstantReal{Rational(-3, 4)});
    CHECK(grid_solve(c, Rational(5), 7).beta_hat == Rational(-3, 4));

    RealPotential lin(LinearReal{Rational(1)});
    GridSolveResult g2 = grid_solve(lin, Rational(1), 2);
    CHECK(g2.beta_hat == Rational(0));
    CHECK(g2.orbit.word() == Word{0});

    CHECK_THROWS_AS(grid_solve(p, Rational(2), 1), precondition_error);
}

TEST_CASE("grid refinement is monotone and bounded") {
    RealPotential p(AbsLinearReal{Rational(1), Rational(1)});
    Rational prev(-1000);
    for (int n : {3, 5, 9, 17}) {
        GridSolveResult g = grid_solve(p, Rational(2), n);
        CHECK(!(g.beta_hat < prev));
        CHECK(!(p.global_sup() < g.beta_hat));
        prev = g.beta_hat;
    }
    CHECK(prev == Rational(0)); // every grid above contains the point 1
}

TEST_CASE("grid approximation error respects the modulus") {
    // top chosen so the optimizer 1 is never a grid point
    RealPotential p(AbsLinearReal{Rational(1), Rational(1)});
    Rational top(7, 3);
    for (int n : {4, 7, 13}) {
        GridSolveResult g = grid_solve(p, top, n);
        Rational mesh = top / Rational(n - 1);
        CHECK(!(g.beta_hat < Rational(0) - p.modulus() * mesh));
        CHECK(!(Rational(0) < g.beta_hat));
    }
}
