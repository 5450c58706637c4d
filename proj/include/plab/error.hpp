#pragma once

#include <stdexcept>
#include <string>

namespace plab {

// Malformed or out-of-range input from a caller.
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured search or enumeration limit was hit before completion.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematical invariant failed to hold; indicates a bug, never bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace plab
