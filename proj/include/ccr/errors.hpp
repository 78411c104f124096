#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccr {

/// Bad user-supplied parameters (grid sizes, flags, file contents).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Shapes of two operands do not fit together.
class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Exact and floating-point data mixed, or exactness requested where it is impossible.
class ModeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Operation not defined for the given boundary rule.
class UnsupportedError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Syntax error in a wavefunction expression; offset is a 0-based character index.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t offset)
        : ValidationError(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Expression evaluation failure (division by zero and similar).
class EvalError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

}  // namespace ccr
