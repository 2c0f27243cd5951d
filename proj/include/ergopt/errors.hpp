#pragma once

#include <stdexcept>
#include <string>

namespace ergopt {

// Error taxonomy mirrored by the CLI exit codes: certification -> 2,
// construction -> 3, budget -> 4. Everything else is a caller bug.

struct certification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation's gate is not met (e.g. the orbit already lives in the
// reduced alphabet). Not a failure of the library.
struct not_applicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact arithmetic left the representable range. Inputs at desk scale
// never trigger this; it exists so silent wraparound is impossible.
struct rational_overflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A "cannot happen" invariant failed; always a bug in this library.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace ergopt
