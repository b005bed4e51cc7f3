#pragma once

#include <stdexcept>
#include <string>

namespace boxhelly {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad caller-supplied value (out-of-range parameter, empty interval, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

// Operands live in different dimensions.
struct DimensionMismatch : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

// Operation requires a nonempty family / list.
struct EmptyFamily : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

// Enumeration or oracle size limit exceeded.
struct LimitExceeded : Error {
    using Error::Error;
};

// Malformed input text (rational literal, family file).
struct ParseError : Error {
    using Error::Error;
};

// A theorem's hypothesis does not hold for the supplied parameters.
struct HypothesisError : Error {
    using Error::Error;
};

// Exact arithmetic left the 64-bit representable range.
struct OverflowError : Error {
    using Error::Error;
};

}  // namespace boxhelly
