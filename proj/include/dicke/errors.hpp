#pragma once

#include <stdexcept>
#include <string>

namespace dicke {

// Bad user-supplied parameter (CLI exit code 2).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Eigensolver or other numerical routine failed to converge (CLI exit code 3).
// Carries the (A, N) labels of the offending subspace when known.
class NumericalFailure : public std::runtime_error {
public:
    NumericalFailure(const std::string& msg, int atoms = -1, int excitation = -1)
        : std::runtime_error(msg), atoms(atoms), excitation(excitation) {}
    int atoms;
    int excitation;
};

// Parameters violate the validity regime of an approximation.
class RegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// State support exceeds the documented cost bound of a quadrature routine.
class SupportTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dicke
