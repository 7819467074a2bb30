#pragma once

#include <stdexcept>
#include <string>

namespace ixm {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input: parse errors, precondition violations, structural mismatches.
// The CLI maps these to exit code 1.
class UserError : public Error {
public:
    using Error::Error;
};

// A value passed to an operation does not fit structurally
// (ring mismatch, wrong exponent-vector length, bad matrix shape).
class StructuralError : public UserError {
public:
    using UserError::UserError;
};

class ParseError : public UserError {
public:
    ParseError(const std::string& what, int line, int column)
        : UserError(what + " (line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// The requested point is not an isolated point of the intersection,
// so the local quotient has infinite vector-space dimension.
class NotIsolatedError : public UserError {
public:
    using UserError::UserError;
};

// Tor_0 has infinite length, so chi is undefined for this input.
class FiniteLengthViolation : public UserError {
public:
    using UserError::UserError;
};

class HomogeneityError : public UserError {
public:
    using UserError::UserError;
};

class PointNotOnIntersectionError : public UserError {
public:
    using UserError::UserError;
};

// A mathematical invariant the implementation relies on was violated.
// Always a bug, never a data problem. The CLI maps these to exit code 2.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace ixm
