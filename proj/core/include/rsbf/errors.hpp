#pragma once

#include <stdexcept>
#include <string>

namespace rsbf {

/// Malformed or inconsistent user input (bad generator lists, out-of-range
/// indices, invalid levels).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested computation exceeds a configured enumeration or matrix budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rsbf
