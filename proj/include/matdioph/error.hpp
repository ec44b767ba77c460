#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matdioph {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error in polynomial or system text; `position` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// A variable has no matrix assigned.
class MissingAssignmentError : public Error {
public:
    explicit MissingAssignmentError(const std::string& symbol)
        : Error("no assignment for variable '" + symbol + "'"), symbol_(symbol) {}

    const std::string& symbol() const noexcept { return symbol_; }

private:
    std::string symbol_;
};

/// A witness does not have the shape a reduction requires.
class InvalidWitnessError : public Error {
public:
    using Error::Error;
};

/// The bounded search space exceeds the configured ceiling.
class SpaceTooLargeError : public Error {
public:
    SpaceTooLargeError(const std::string& size, const std::string& ceiling)
        : Error("search space of " + size + " assignments exceeds ceiling " + ceiling), size_(size) {}

    const std::string& size() const noexcept { return size_; }

private:
    std::string size_;
};

}  // namespace matdioph
