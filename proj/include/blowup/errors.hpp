#pragma once

#include <stdexcept>
#include <string>

namespace blowup {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (edge lists, graph6 strings, JSON documents).
struct ParseError : Error {
    using Error::Error;
};

// Structurally valid input that violates a contract (self-loops, ranges,
// length mismatches, unsupported parameters).
struct ValidationError : Error {
    using Error::Error;
};

// Eigensolver failure: non-convergence or a residual above the contract
// bound. Never silently ignored.
struct NumericError : Error {
    using Error::Error;
};

// A constructed tensor eigenpair failed its residual certification. This
// signals an implementation bug (or a falsified reduction), not bad input.
struct CertificationError : Error {
    using Error::Error;
};

}  // namespace blowup
