#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slcs {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Formula or script text that does not follow the grammar. `column` is 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t column)
        : Error(message + " at column " + std::to_string(column)), column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// Malformed or inconsistent model/image input.
class LoadError : public Error {
public:
    using Error::Error;
};

/// Well-formed input that cannot be evaluated (unknown letter, undefined binding, ...).
class SemanticError : public Error {
public:
    using Error::Error;
};

/// Operands built over different point universes.
class UniverseMismatch : public Error {
public:
    UniverseMismatch(std::size_t expected, std::size_t actual)
        : Error("universe size mismatch: expected " + std::to_string(expected) + ", got " +
                std::to_string(actual)) {}
};

} // namespace slcs
