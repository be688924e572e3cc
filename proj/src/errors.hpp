#pragma once

#include <stdexcept>
#include <string>

namespace alcoved {

/// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: unknown type, out-of-range index, malformed spec.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A mathematical identity that must hold was violated. This is always an
/// implementation bug, never a user error.
class DefectError : public Error {
 public:
  using Error::Error;
};

/// An enumeration exceeded its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace alcoved
