#pragma once

#include <stdexcept>
#include <string>

namespace mfact {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

// Raised when an operation requires an M-matrix and the predicate fails.
class NotMMatrixError : public Error {
public:
    using Error::Error;
};

// Raised when a (J,K) split does not partition the singular-class indices.
class BadSplitError : public Error {
public:
    using Error::Error;
};

// A pivot that the theory guarantees nonzero came out structurally zero.
// `column` is 0-based; messages report it 1-based.
class ZeroPivotError : public Error {
public:
    ZeroPivotError(int column0, const std::string& msg)
        : Error(msg), column(column0) {}
    int column;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Consistency alarm: a state the construction rules out was reached.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace mfact
