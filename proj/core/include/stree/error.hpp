#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace stree {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A raw symbol (or text character) outside 1..sigma.
class SymbolError : public Error {
public:
    SymbolError(std::size_t position, const std::string& what)
        : Error(what), position_(position) {}

    /// 1-based position of the offending symbol.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class RangeError : public Error {
public:
    using Error::Error;
};

/// Periodicity and growth are undefined for the empty string.
class EmptyStringError : public Error {
public:
    using Error::Error;
};

/// Precondition violations on numeric arguments (k = 0, non-prime p, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An exhaustive enumeration would exceed the configured budget.
class BudgetError : public Error {
public:
    BudgetError(std::string required, const std::string& what)
        : Error(what), required_(std::move(required)) {}

    /// Decimal count of strings the request would have enumerated.
    const std::string& required() const noexcept { return required_; }

private:
    std::string required_;
};

/// Malformed experiment configuration or input file.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace stree
