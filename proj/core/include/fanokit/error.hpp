#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fanokit {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input. `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Shape mismatch between matrices, rings or ambient spaces.
class DimensionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An exhaustive search would exceed the configured work budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::string estimate)
      : Error(what + " (estimated work " + estimate + ")"), estimate_(std::move(estimate)) {}
  const std::string& estimate() const noexcept { return estimate_; }

 private:
  std::string estimate_;
};

}  // namespace fanokit
