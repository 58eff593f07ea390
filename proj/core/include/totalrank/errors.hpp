#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace totalrank {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input that violates a value constraint (negative weight, index overflow, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// A numerical precondition does not hold (damping factor range, spectral-radius guard, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public DomainError {
public:
    using DomainError::DomainError;
};

class ConvergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace totalrank
