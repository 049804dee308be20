#pragma once

#include <stdexcept>

namespace wavearith {

// Input outside an operation's domain (bad coefficients, negative operands,
// zero denominators, unknown identifiers).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Adaptive quadrature hit its depth cap without meeting the tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wavearith
