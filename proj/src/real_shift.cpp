#include "ergopt/real_shift.hpp"

namespace ergopt {

RealPotential::RealPotential(AbsLinearReal p) : impl_(p), name_("abs-linear") {
    if (p.slope.is_negative() || p.center.is_negative()) {
        throw precondition_error("abs-linear potential needs slope, center >= 0");
    }
}

RealPotential::RealPotential(LinearReal p) : impl_(p), name_("linear") {
    if (p.slope.is_negative()) throw precondition_error("linear potential needs slope >= 0");
}

RealPotential::RealPotential(ConstantReal p) : impl_(p), name_("constant") {}

Rational RealPotential::eval(std::span<const Rational> w) const {
    if (w.empty()) throw precondition_error("empty window");
    const Rational& x = w[0];
    if (x.is_negative()) throw precondition_error("negative coordinate");
    return std::visit(
        [&](const auto& p) -> Rational {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, AbsLinearReal>) {
                return -(p.slope * (x - p.center).abs());
            } else if constexpr (std::is_same_v<T, LinearReal>) {
                return -(p.slope * x);
            } else {
                return p.value;
            }
        },
        impl_);
}

Rational RealPotential::cylinder_sup(const Rational& x) const {
    return eval(std::span<const Rational>(&x, 1)); // k = 1: the cylinder is the value
}

Rational RealPotential::tail_value(const Rational& x) const {
    return std::visit(
        [&](const auto& p) -> Rational {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, AbsLinearReal>) {
                // flat at 0 until the center, then the decreasing branch
                if (x < p.center) return Rational(0);
                return -(p.slope * (x - p.center));
            } else if constexpr (std::is_same_v<T, LinearReal>) {
                return -(p.slope * x);
            } else {
                return p.value;
            }
        },
        impl_);
}

std::optional<Rational> RealPotential::tail_first_below(const Rational& target) const {
    return std::visit(
        [&](const auto& p) -> std::optional<Rational> {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, AbsLinearReal>) {
                if (p.slope.is_zero()) {
                    if (Rational(0) < target) return Rational(0);
                    return std::nullopt;
                }
                if (Rational(0) < target) return Rational(0);
                return p.center - target / p.slope;
            } else if constexpr (std::is_same_v<T, LinearReal>) {
                if (p.slope.is_zero()) {
                    if (Rational(0) < target) return Rational(0);
                    return std::nullopt;
                }
                Rational t = -(target / p.slope);
                return t.is_negative() ? Rational(0) : t;
            } else {
                if (p.value < target) return Rational(0);
                return std::nullopt;
            }
        },
        impl_);
}

Rational RealPotential::box_min(const Rational& lo, const Rational& hi) const {
    if (hi < lo || lo.is_negative()) throw precondition_error("bad box");
    return std::visit(
        [&](const auto& p) -> Rational {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, AbsLinearReal>) {
                // farthest corner from the center
                Rational dist = max(p.center - lo, hi - p.center);
                if (dist.is_negative()) dist = Rational(0);
                return -(p.slope * dist);
            } else if constexpr (std::is_same_v<T, LinearReal>) {
                return -(p.slope * hi);
            } else {
                return p.value;
            }
        },
        impl_);
}

Rational RealPotential::modulus() const {
    return std::visit(
        [&](const auto& p) -> Rational {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ConstantReal>) {
                return Rational(0);
            } else {
                return p.slope;
            }
        },
        impl_);
}

Rational RealPotential::global_sup() const {
    return std::visit(
        [&](const auto& p) -> Rational {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ConstantReal>) {
                return p.value;
            } else {
                return Rational(0); // attained at the center / at zero
            }
        },
        impl_);
}

Rational certified_grid_min(const RealPotential& p, const Rational& lo, const Rational& hi,
                            int points) {
    if (points < 2) throw precondition_error("certified_grid_min needs >= 2 points");
    Rational mesh = (hi - lo) / Rational(points - 1);
    Rational best = p.eval(std::span<const Rational>(&lo, 1));
    for (int i = 1; i < points; ++i) {
        Rational x = lo + mesh * Rational(i);
        best = min(best, p.eval(std::span<const Rational>(&x, 1)));
    }
    return best - p.modulus() * mesh;
}

RealReduction reduce_real(const RealPotential& p, const Rational& epsilon,
                          const Rational& beta_lb) {
    if (!(Rational(0) < epsilon)) throw precondition_error("epsilon must be positive");
    RealReduction red;
    red.epsilon = epsilon;
    red.beta_lb = beta_lb;
    red.variation = p.variation_total();

    auto cut1 = p.tail_first_below(beta_lb - epsilon);
    if (!cut1) {
        throw certification_error("tail certificate for '" + p.name() +
                                  "' never crosses the first threshold");
    }
    red.cut1 = *cut1;
    red.min_on_box = p.box_min(Rational(0), red.cut1);

    auto cut2 = p.tail_first_below(red.min_on_box - red.variation);
    if (!cut2) {
        throw certification_error("tail certificate for '" + p.name() +
                                  "' never crosses the second threshold");
    }
    red.cut2_infimum = max(*cut2, red.cut1);
    red.margin = Rational(1, 1000) * max(Rational(1), red.cut2_infimum);
    red.cut2 = red.cut2_infimum + red.margin;
    red.notes.push_back("cut2 is the infimum threshold plus the declared margin; the strict "
                        "inequality holds from the infimum on, the margin settles the endpoint");
    return red;
}

GridSolveResult grid_solve(const RealPotential& p, const Rational& top, int n) {
    if (n < 2) throw precondition_error("grid_solve needs n >= 2");
    if (top.is_negative()) throw precondition_error("grid_solve needs top >= 0");

    GridSolveResult out{Rational(0), PeriodicOrbit{Word{0}}, {}};
    Rational mesh = top / Rational(n - 1);
    for (int i = 0; i < n; ++i) out.grid.push_back(mesh * Rational(i));

    // full shift over the grid indices; k = 1 for every built-in family
    WeightedGraph wg;
    wg.memory = 1;
    for (int i = 0; i < n; ++i) wg.vertex_words.push_back({i});
    wg.out.assign(static_cast<std::size_t>(n), {});
    for (int a = 0; a < n; ++a) {
        Rational w = p.eval(std::span<const Rational>(&out.grid[static_cast<std::size_t>(a)], 1));
        for (int b = 0; b < n; ++b) wg.out[static_cast<std::size_t>(a)].push_back({b, w});
    }
    auto best = max_mean_cycle<Rational>(wg);
    if (!best) throw internal_error("full shift lift lost its cycles");
    out.beta_hat = best->value;
    out.orbit = PeriodicOrbit(wg.spell_cycle(best->cycle));
    return out;
}

} // namespace ergopt
