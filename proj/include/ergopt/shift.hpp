#pragma once

#include "ergopt/orbit.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>

namespace ergopt {

// Countable 0/1 transition structures. The matrix is a predicate plus an
// ordered successor enumerator; irreducibility over the full countable
// alphabet is the caller's assertion and is verified only on finite
// restrictions.

struct FullShift {};

// A(i, 0) = 1 and A(i, i+1) = 1, all else 0
struct RenewalShift {};

// |i - j| <= width
struct BandShift {
    Symbol width;
};

// explicit edges among symbols <= support_max, a named family beyond
struct FileShift {
    Symbol support_max;
    std::set<std::pair<Symbol, Symbol>> edges;
    std::variant<FullShift, RenewalShift, BandShift> tail;
};

class TransitionSystem {
public:
    explicit TransitionSystem(FullShift s) : impl_(s), name_("full") {}
    explicit TransitionSystem(RenewalShift s) : impl_(s), name_("renewal") {}
    explicit TransitionSystem(BandShift s);
    explicit TransitionSystem(FileShift s);

    const std::string& name() const { return name_; }

    bool allows(Symbol i, Symbol j) const;
    bool allows_word(const Word& w) const;
    bool allows_cyclic(const Word& w) const;

    // successors of i in strictly increasing order: smallest successor
    // strictly greater than `after` (pass -1 to start), nullopt when done.
    // May enumerate forever for families with infinite out-degree.
    std::optional<Symbol> next_successor(Symbol i, Symbol after) const;

    // asserted by the caller; reduce() refuses to run without it
    bool irreducible_assertion() const { return irreducible_; }

private:
    std::variant<FullShift, RenewalShift, BandShift, FileShift> impl_;
    std::string name_;
    bool irreducible_ = true;
};

} // namespace ergopt
