#include "ergopt/shift.hpp"

#include <algorithm>

namespace ergopt {

TransitionSystem::TransitionSystem(BandShift s) : impl_(s), name_("band") {
    if (s.width < 1) throw precondition_error("band shift needs width >= 1");
}

TransitionSystem::TransitionSystem(FileShift s) : impl_(std::move(s)), name_("adjacency-file") {
    const auto& f = std::get<FileShift>(impl_);
    for (const auto& [a, b] : f.edges) {
        if (a < 0 || b < 0 || a > f.support_max || b > f.support_max) {
            throw precondition_error("adjacency-file edge outside the declared support");
        }
    }
}

namespace {

bool family_allows(const FullShift&, Symbol, Symbol) {
    return true;
}

bool family_allows(const RenewalShift&, Symbol i, Symbol j) {
    return j == 0 || j == i + 1;
}

bool family_allows(const BandShift& s, Symbol i, Symbol j) {
    Symbol d = i > j ? i - j : j - i;
    return d <= s.width;
}

bool family_allows(const FileShift& s, Symbol i, Symbol j) {
    if (i <= s.support_max && j <= s.support_max) {
        return s.edges.count({i, j}) > 0;
    }
    return std::visit([&](const auto& tail) { return family_allows(tail, i, j); }, s.tail);
}

std::optional<Symbol> family_next(const FullShift&, Symbol, Symbol after) {
    return after + 1;
}

std::optional<Symbol> family_next(const RenewalShift&, Symbol i, Symbol after) {
    if (after < 0) return 0;
    if (after < i + 1) return i + 1;
    return std::nullopt;
}

std::optional<Symbol> family_next(const BandShift& s, Symbol i, Symbol after) {
    Symbol lo = i > s.width ? i - s.width : 0;
    Symbol hi = i + s.width;
    Symbol cand = std::max(after + 1, lo);
    if (cand > hi) return std::nullopt;
    return cand;
}

std::optional<Symbol> family_next(const FileShift& s, Symbol i, Symbol after) {
    auto tail_next = [&](Symbol from) {
        return std::visit([&](const auto& tail) { return family_next(tail, i, from); }, s.tail);
    };
    if (i > s.support_max) return tail_next(after);
    // inside the support: explicit row up to support_max, tail family beyond
    std::optional<Symbol> expl;
    auto it = s.edges.lower_bound({i, after + 1});
    if (it != s.edges.end() && it->first == i) expl = it->second;
    std::optional<Symbol> tail = tail_next(std::max(after, s.support_max));
    if (expl && tail) return std::min(*expl, *tail);
    return expl ? expl : tail;
}

} // namespace

bool TransitionSystem::allows(Symbol i, Symbol j) const {
    if (i < 0 || j < 0) throw precondition_error("negative symbol");
    return std::visit([&](const auto& s) { return family_allows(s, i, j); }, impl_);
}

bool TransitionSystem::allows_word(const Word& w) const {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (!allows(w[i], w[i + 1])) return false;
    }
    return true;
}

bool TransitionSystem::allows_cyclic(const Word& w) const {
    if (w.empty()) return false;
    return allows_word(w) && allows(w.back(), w.front());
}

std::optional<Symbol> TransitionSystem::next_successor(Symbol i, Symbol after) const {
    if (i < 0) throw precondition_error("negative symbol");
    return std::visit([&](const auto& s) { return family_next(s, i, after); }, impl_);
}

} // namespace ergopt
