#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad input: malformed graph, mismatched colouring, invalid parameter.
struct InvalidArgument : Error {
    using Error::Error;
};

/// Parameters outside the regime the construction supports (e.g. p > 1).
struct OutOfRegime : Error {
    using Error::Error;
};

/// A configured enumeration or size cap would be exceeded.
struct CapExceeded : Error {
    using Error::Error;
};

/// Resampling gave up; the parameters are too small for concentration.
struct RetryExhausted : Error {
    using Error::Error;
};

/// An internal invariant failed; indicates a bug, not bad input.
struct InvariantViolation : Error {
    using Error::Error;
};

} // namespace ramsey
