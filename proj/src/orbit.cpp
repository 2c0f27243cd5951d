#include "ergopt/orbit.hpp"

#include <algorithm>
#include <sstream>

namespace ergopt {

std::string word_str(const Word& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ";
        os << w[i];
    }
    os << ")";
    return os.str();
}

namespace {

// shortest period of w (the primitive root length)
std::size_t primitive_root(const Word& w) {
    std::size_t n = w.size();
    for (std::size_t d = 1; d <= n / 2; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = (w[i] == w[i - d]);
        if (ok) return d;
    }
    return n;
}

Word minimal_rotation(Word w) {
    std::size_t n = w.size();
    std::size_t best = 0;
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            Symbol a = w[(s + i) % n];
            Symbol b = w[(best + i) % n];
            if (a != b) {
                if (a < b) best = s;
                break;
            }
        }
    }
    std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(best), w.end());
    return w;
}

} // namespace

PeriodicOrbit::PeriodicOrbit(Word period_word) {
    if (period_word.empty()) throw precondition_error("empty period word");
    for (Symbol s : period_word) {
        if (s < 0) throw precondition_error("negative symbol in period word");
    }
    period_word.resize(primitive_root(period_word));
    word_ = minimal_rotation(std::move(period_word));
}

Word PeriodicOrbit::window(std::int64_t i, int k) const {
    Word out;
    out.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) out.push_back(at(i + j));
    return out;
}

Symbol PeriodicOrbit::min_symbol() const {
    return *std::min_element(word_.begin(), word_.end());
}

bool PeriodicOrbit::contains_at_least(Symbol bound) const {
    return std::any_of(word_.begin(), word_.end(), [&](Symbol s) { return s >= bound; });
}

Symbol starts_in(const PeriodicOrbit& x) {
    return x.min_symbol();
}

} // namespace ergopt
