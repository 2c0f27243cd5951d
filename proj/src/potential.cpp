#include "ergopt/potential.hpp"

#include "ergopt/shift.hpp"

namespace ergopt {

namespace {

Rational capped_gap(const Rational& a, const Rational& b, const Rational& cap) {
    Rational d = (a - b).abs();
    return min(d, cap);
}

} // namespace

Potential::Potential(LinearPotential p)
    : impl_(p), memory_(1), name_("linear"), variation_total_(0), global_sup_(0) {
    if (p.slope.is_negative()) throw precondition_error("linear potential needs slope >= 0");
}

Potential::Potential(CappedDiffPotential p)
    : impl_(p), memory_(2), name_("capped-diff"), variation_total_(p.cap), global_sup_(0) {
    if (p.slope.is_negative() || p.cap.is_negative()) {
        throw precondition_error("capped-diff potential needs slope, cap >= 0");
    }
    variation_ = {p.cap}; // V_1: only the difference term sees x1
}

Potential::Potential(ConstantPotential p)
    : impl_(p), memory_(1), name_("constant"), variation_total_(0), global_sup_(p.value) {}

Potential::Potential(TablePotential p)
    : impl_(std::move(p)), memory_(1), name_("table"), variation_total_(0), global_sup_(0) {
    const auto& t = std::get<TablePotential>(impl_);
    if (t.tail_slope.is_negative()) {
        throw precondition_error("table potential tail must be nonincreasing (slope >= 0)");
    }
    for (const auto& [sym, _] : t.values) {
        if (sym < 0) throw precondition_error("table potential has a negative symbol");
    }
    Rational best = tail_value(tail_start());
    for (const auto& [_, v] : t.values) best = max(best, v);
    global_sup_ = best;
}

Rational Potential::eval(std::span<const Symbol> w) const {
    if (static_cast<int>(w.size()) < memory_) {
        throw precondition_error("word shorter than the potential memory");
    }
    return std::visit(
        [&](const auto& p) -> Rational {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, LinearPotential>) {
                return -(p.slope * Rational(w[0]));
            } else if constexpr (std::is_same_v<T, CappedDiffPotential>) {
                return -(p.slope * Rational(w[0])) -
                       capped_gap(Rational(w[0]), Rational(w[1]), p.cap);
            } else if constexpr (std::is_same_v<T, ConstantPotential>) {
                return p.value;
            } else {
                auto it = p.values.find(w[0]);
                if (it != p.values.end()) return it->second;
                return tail_value(w[0]);
            }
        },
        impl_);
}

Rational Potential::cylinder_sup(Symbol i) const {
    return std::visit(
        [&](const auto& p) -> Rational {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, LinearPotential>) {
                return -(p.slope * Rational(i));
            } else if constexpr (std::is_same_v<T, CappedDiffPotential>) {
                return -(p.slope * Rational(i)); // attained with x1 = x0
            } else if constexpr (std::is_same_v<T, ConstantPotential>) {
                return p.value;
            } else {
                auto it = p.values.find(i);
                if (it != p.values.end()) return it->second;
                return tail_value(i);
            }
        },
        impl_);
}

Symbol Potential::tail_start() const {
    if (const auto* t = std::get_if<TablePotential>(&impl_)) {
        return t->values.empty() ? 0 : t->values.rbegin()->first + 1;
    }
    return 0;
}

Rational Potential::tail_value(Symbol i) const {
    return std::visit(
        [&](const auto& p) -> Rational {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, LinearPotential>) {
                return -(p.slope * Rational(i));
            } else if constexpr (std::is_same_v<T, CappedDiffPotential>) {
                return -(p.slope * Rational(i));
            } else if constexpr (std::is_same_v<T, ConstantPotential>) {
                return p.value;
            } else {
                return p.tail_intercept - p.tail_slope * Rational(i);
            }
        },
        impl_);
}

Rational eval_potential(const Potential& p, std::span<const Symbol> word) {
    return p.eval(word);
}

Rational eval_potential(const Potential& p, const Word& word) {
    return p.eval(std::span<const Symbol>(word.data(), word.size()));
}

Rational eval_potential(const Potential& p, const Word& word, const TransitionSystem& ts) {
    if (static_cast<int>(word.size()) < p.memory()) {
        throw precondition_error("word shorter than the potential memory");
    }
    Word prefix(word.begin(), word.begin() + p.memory());
    if (!ts.allows_word(prefix)) {
        throw precondition_error("defining prefix " + word_str(prefix) + " is not allowable");
    }
    return eval_potential(p, word);
}

Rational cylinder_sup_query(const Potential& p, Symbol i) {
    return p.cylinder_sup(i);
}

} // namespace ergopt
