#pragma once

#include <stdexcept>
#include <string>

namespace lspom {

// Base for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Argument outside the documented validity range of an approximation
// (series radius, quasi-static limit, ...).
class ValidityError : public Error {
public:
    using Error::Error;
};

// Evaluation at a genuine singularity (z = 0 for Neumann/Hankel functions).
class SingularityError : public Error {
public:
    using Error::Error;
};

// Resonance pole of a lossless idealization (vanishing denominator).
class ResonanceError : public Error {
public:
    using Error::Error;
};

// Invalid or inconsistent configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Numerical failure at runtime (solver breakdown, pole on a grid point).
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace lspom
