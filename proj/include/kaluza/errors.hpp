#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kaluza {

/// Operand length does not fit the operation.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Consecutive linear stages whose dimensions do not chain.
class CompositionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A 2x2 block of the permuted multiplication matrix is not bisymmetric.
class StructureError : public std::runtime_error {
public:
    StructureError(std::size_t row_pair, std::size_t column_pair)
        : std::runtime_error("block (" + std::to_string(row_pair) + ", " + std::to_string(column_pair) +
                             ") of the permuted multiplication matrix is not bisymmetric"),
          row_pair_(row_pair),
          column_pair_(column_pair) {}

    std::size_t row_pair() const noexcept { return row_pair_; }
    std::size_t column_pair() const noexcept { return column_pair_; }

private:
    std::size_t row_pair_;
    std::size_t column_pair_;
};

/// A diagonal entry is not +-c_m for any m.
class DerivationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed operand text; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                             what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace kaluza
