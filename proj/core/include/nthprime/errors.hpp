#pragma once

#include <stdexcept>
#include <string>

namespace nthprime {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (n < 6 for
/// Dusart bounds, x < 2 for li, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Request would exceed the configured memory or time budget.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Caller broke a documented precondition (e.g. insufficient base primes).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Input lies beyond the range the chosen method handles exactly.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Requested accuracy is not attainable in the working precision.
class PrecisionError : public Error {
public:
    using Error::Error;
};

} // namespace nthprime
