#pragma once

#include <stdexcept>
#include <string>

namespace microweight {

/// Argument outside the valid range (rank for a type, weight index, caps).
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// A vector that must lie in the span of the simple roots does not.
struct SpanError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A vector used as a root is not a root of the system.
struct NotARootError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An input violates a documented precondition (non-minuscule weight,
/// dependent basis, collinear cube factor, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The data contradicts the structure an operation relies on, e.g. no
/// unique full-count sum in a lambda^2 recovery.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed text/JSON input. `line` is 1-based, 0 when not applicable.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line(line)
    {
    }
    std::size_t line;
};

} // namespace microweight
