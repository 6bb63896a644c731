#ifndef KTCY_ERRORS_HPP
#define KTCY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ktcy {

/// Bad call arguments (sizes, enums, ranges).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Numeric preconditions on field data (finiteness, mean-zero sources,
/// ellipticity, hypothesis checks).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Nonlinear solve did not reach the requested tolerance.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ktcy

#endif
