#pragma once

#include <stdexcept>
#include <string>

namespace symcover {

// Bad user input: malformed partitions, inconsistent specs, unknown labels.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input outside a documented size cap.
struct CapExceeded : std::domain_error {
    using std::domain_error::domain_error;
};

// Correctness tripwire. Thrown when an exactness invariant that the
// implementation guarantees (e.g. an A_n structure constant reducing to a
// rational integer) fails to hold. Never expected in a correct build.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

[[noreturn]] inline void internal_error(const std::string& what) {
    throw InternalError("symcover internal error: " + what);
}

}  // namespace symcover
