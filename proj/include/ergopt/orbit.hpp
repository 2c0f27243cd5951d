#pragma once

#include "ergopt/errors.hpp"
#include "ergopt/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ergopt {

// Alphabet is the non-negative integers. int64 keeps threshold arithmetic
// (which mixes symbols and rationals) free of casts; negativity is rejected
// at construction sites.
using Symbol = std::int64_t;
using Word = std::vector<Symbol>;

std::string word_str(const Word& w);

// One primitive period of a periodic point, stored in canonical form:
// the word is not a power of a shorter word and starts at its
// lexicographically minimal rotation. Equality of orbits is word equality.
class PeriodicOrbit {
public:
    explicit PeriodicOrbit(Word period_word);

    const Word& word() const { return word_; }
    std::int64_t period() const { return static_cast<std::int64_t>(word_.size()); }

    Symbol at(std::int64_t i) const { // index taken modulo the period
        std::int64_t n = period();
        std::int64_t r = i % n;
        if (r < 0) r += n;
        return word_[static_cast<std::size_t>(r)];
    }

    // k consecutive symbols of the bi-infinite extension starting at i
    Word window(std::int64_t i, int k) const;

    Symbol min_symbol() const;
    bool contains_at_least(Symbol bound) const; // some symbol >= bound

    friend bool operator==(const PeriodicOrbit& a, const PeriodicOrbit& b) {
        return a.word_ == b.word_;
    }

private:
    Word word_;
};

// Uniform invariant probability on the orbit of its supporting point.
struct PeriodicMeasure {
    PeriodicOrbit orbit;

    std::vector<Rational> weights() const {
        return std::vector<Rational>(static_cast<std::size_t>(orbit.period()),
                                     Rational(1, orbit.period()));
    }
};

// smallest natural appearing in the coordinates
Symbol starts_in(const PeriodicOrbit& x);

} // namespace ergopt
