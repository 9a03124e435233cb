#pragma once

#include <stdexcept>
#include <string>

namespace sympow {

/// An argument outside the documented domain of an operation.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural hypothesis of an operation is not met (e.g. a_1 not linear).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured resource budget was exhausted. This is never a mathematical
/// verdict; callers must report it separately from "holds"/"fails".
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an explicit fixture fails one of its validity checks.
class FixtureInvalid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sympow
