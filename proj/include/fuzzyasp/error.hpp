#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzyasp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Quadruple parameters are not ordered a <= b <= c <= d.
class OrderViolation : public Error {
public:
    using Error::Error;
};

/// The core [b, c] of a fuzzy truth value leaves [0, 1].
class CoreOutOfRange : public Error {
public:
    using Error::Error;
};

class AlphaOutOfRange : public Error {
public:
    using Error::Error;
};

class NotRestricted : public Error {
public:
    using Error::Error;
};

/// Knowledge aggregation of two distinct values with the same uncertainty.
class AggregationTie : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A syntactically valid fuzzy literal whose parameters are not a member of the value space.
class DomainError : public Error {
public:
    DomainError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class UnsafeRule : public Error {
public:
    UnsafeRule(const std::string& message, std::string variable)
        : Error(message), variable_(std::move(variable)) {}

    const std::string& variable() const noexcept { return variable_; }

private:
    std::string variable_;
};

class QuadratureFailure : public Error {
public:
    using Error::Error;
};

class ClosureTooLarge : public Error {
public:
    using Error::Error;
};

} // namespace fuzzyasp
