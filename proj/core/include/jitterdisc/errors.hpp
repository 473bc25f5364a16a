#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jitterdisc {

/// Bad argument or malformed object (dimension mismatch, r off the grid, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A formula was asked for outside the region where it is defined or
/// where its hypotheses hold.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested point set would exceed the configured point cap or overflow.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// The exact or certified engine would exceed its work budget.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace jitterdisc
