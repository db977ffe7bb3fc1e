#pragma once

#include <stdexcept>
#include <string>

namespace mdt {

// Base for every error raised by the library. The CLI maps the subclasses
// onto distinct diagnostics and exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

// Mismatched dimension/order between operands, or malformed program rows.
class ShapeError : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of the operation (negative
// weights, non-stepped input to stepped_weights, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class StateError : public Error {
public:
    using Error::Error;
};

// Operation only defined for order-2 matrices.
class OrderError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class VerificationError : public Error {
public:
    using Error::Error;
};

// Unreadable or unwritable file.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace mdt
