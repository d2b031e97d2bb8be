#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace hrds {

/// Caller violated a precondition (bad parameters, mismatched fields, ...).
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Division by zero and similar field-level failures.
class ArithmeticError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// An exhaustive computation would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(const std::string& what, unsigned long long required)
      : std::runtime_error(what + " (requires " + std::to_string(required) + ")"),
        required_(required) {}

  unsigned long long required() const noexcept { return required_; }

private:
  unsigned long long required_;
};

/// An internal identity failed (inexact division, invalid character-sum reduction).
/// Seeing one of these means a bug, not bad input.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Malformed set file. line() is the physical 1-based line; record() is the 1-based
/// position of the offending matrix in the body, when the error is in the body.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what, std::optional<std::size_t> record = std::nullopt)
      : std::runtime_error("line " + std::to_string(line) +
                           (record ? " (matrix " + std::to_string(*record) + ")" : std::string()) + ": " + what),
        line_(line),
        record_(record) {}

  std::size_t line() const noexcept { return line_; }
  std::optional<std::size_t> record() const noexcept { return record_; }

private:
  std::size_t line_;
  std::optional<std::size_t> record_;
};

}  // namespace hrds
