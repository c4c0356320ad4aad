#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lienil {

// Malformed or out-of-range user input (bad prime, mismatched lengths, parse errors).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input text rejected at a known position (1-based line and column).
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A pc presentation whose collection does not define a group of the full order.
class PresentationInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Order cap or chain cap exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation called outside its mathematical domain (e.g. invariants of a nonabelian subgroup).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Something that cannot happen for a finite p-group did happen.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lienil
