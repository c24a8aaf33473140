#pragma once

#include <stdexcept>
#include <string>

namespace palsum {

/// Malformed textual input: empty strings, non-digits, leading zeros.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was asked for something outside its domain, e.g. the
/// palindromic precursor of zero or a subtraction that would underflow.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A brute-force search or table would exceed its configured desk-scale bound.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace palsum
