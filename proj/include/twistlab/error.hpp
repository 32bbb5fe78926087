#pragma once

#include <stdexcept>
#include <string>

namespace twistlab {

// Base for every error the library raises on purpose. CLI maps subclasses to
// exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular") {}
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

// A mathematical precondition or invariant of a generator failed.
class MathError : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace twistlab
