#pragma once

#include "ergopt/mmc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ergopt {

// Potentials on the full shift over non-negative reals, evaluated exactly
// at rational points. The built-in families are piecewise linear, so box
// minima and threshold crossings are exact; the modulus (a Lipschitz bound)
// certifies the generic grid path.

// f = -slope * |x0 - center|
struct AbsLinearReal {
    Rational slope;
    Rational center;
};

// f = -slope * x0
struct LinearReal {
    Rational slope;
};

struct ConstantReal {
    Rational value;
};

class RealPotential {
public:
    explicit RealPotential(AbsLinearReal p);
    explicit RealPotential(LinearReal p);
    explicit RealPotential(ConstantReal p);

    int memory() const { return 1; }
    const std::string& name() const { return name_; }

    Rational eval(std::span<const Rational> window) const;
    Rational cylinder_sup(const Rational& x) const;

    // nonincreasing certificate dominating cylinder_sup
    Rational tail_value(const Rational& x) const;
    // infimum threshold t with tail strictly below `target` beyond t;
    // nullopt when the tail never crosses
    std::optional<Rational> tail_first_below(const Rational& target) const;

    Rational box_min(const Rational& lo, const Rational& hi) const; // exact, k = 1
    Rational modulus() const; // Lipschitz bound on compact boxes
    Rational variation_total() const { return Rational(0); }
    Rational global_sup() const;

private:
    std::variant<AbsLinearReal, LinearReal, ConstantReal> impl_;
    std::string name_;
};

// Generic certified lower bound for the box minimum: grid value minus
// modulus times the mesh. The exact box_min is always within it.
Rational certified_grid_min(const RealPotential& p, const Rational& lo, const Rational& hi,
                            int points);

struct RealReduction {
    Rational epsilon;
    Rational beta_lb;
    Rational cut1;         // infimum first threshold
    Rational min_on_box;   // exact min of f over [0, cut1]
    Rational variation;
    Rational cut2_infimum; // before the declared margin
    Rational margin;
    Rational cut2;         // cut2_infimum + margin
    std::vector<std::string> notes;
};

RealReduction reduce_real(const RealPotential& p, const Rational& epsilon,
                          const Rational& beta_lb);

struct GridSolveResult {
    Rational beta_hat;   // lower approximation of the optimum
    PeriodicOrbit orbit; // over grid indices
    std::vector<Rational> grid;
};

// Discretize [0, top] into n equispaced points and solve the full shift
// over them; beta_hat never exceeds the optimum and improves under grid
// refinement with error at most modulus * mesh.
GridSolveResult grid_solve(const RealPotential& p, const Rational& top, int n);

} // namespace ergopt
