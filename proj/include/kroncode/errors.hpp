#pragma once

#include <stdexcept>
#include <string>

namespace kron {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAPrimePower : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct InvalidParam : Error {
    using Error::Error;
};

struct UnsupportedFamily : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct NonIntegerResult : Error {
    using Error::Error;
};

}  // namespace kron
