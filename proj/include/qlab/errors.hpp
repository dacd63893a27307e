#pragma once

#include <stdexcept>
#include <string>

namespace qlab {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input violates a documented precondition (bad argument, point on a cut, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// An iterative method failed to reach its target (root finding, quadrature, ...).
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

/// Malformed or missing external data (coefficient files, JSON schemas).
struct DataError : Error {
    explicit DataError(const std::string& msg) : Error(msg) {}
};

} // namespace qlab
