#pragma once

#include <stdexcept>
#include <string>

namespace aflab {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad configuration (grid too small, parameter out of family range, ...).
struct ConfigError : Error {
    using Error::Error;
};

/// A value left the admissible domain of an operation (k out of range,
/// weight undefined at a node, phi evaluated outside its interval).
struct DomainError : Error {
    using Error::Error;
};

/// A geometric hypothesis failed hard where the operation cannot proceed
/// (non-positive I_k, negative H_k under a sqrt, ...).
struct HypothesisError : Error {
    using Error::Error;
};

/// Shape validation failure: convexity, star-shapedness, regularity.
struct ShapeError : Error {
    using Error::Error;
};

/// Caller misuse: unknown check id, mismatched grids, empty input.
struct UsageError : Error {
    using Error::Error;
};

}  // namespace aflab
