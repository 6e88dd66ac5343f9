#pragma once

#include <stdexcept>

namespace kroncoeff {

// Caller violated an operation's preconditions.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed; this is a bug, not bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace kroncoeff
