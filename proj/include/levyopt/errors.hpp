#pragma once

#include <stdexcept>
#include <string>

namespace levyopt {

// Base class for all library failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or degenerate input: zero polynomial, family length mismatch,
// nonpositive gamma, invalid model parameters.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Requested order exceeds the available cumulants or the global order cap.
class OrderError : public Error {
public:
    using Error::Error;
};

// Argument outside the domain of an exponent, MGF or transform.
class DomainError : public Error {
public:
    using Error::Error;
};

// Operation not available for this model class (two-sided factorization,
// wrong spectral side, value path without a closed-form density).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

} // namespace levyopt
