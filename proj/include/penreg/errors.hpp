#pragma once

#include <stdexcept>
#include <string>

namespace penreg {

/// Invalid arguments or a violated precondition on a public entry point.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (JSON files, element strings, CLI block lists).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A broken internal invariant. Reaching this is a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

class DivisionByZeroError : public UsageError {
public:
    DivisionByZeroError() : UsageError("division by zero") {}
};

class SingularMatrixError : public UsageError {
public:
    SingularMatrixError() : UsageError("matrix is singular") {}
};

} // namespace penreg
