#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rshds {

/// Bad argument to a library operation (odd h, k >= n-1, zero vector, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A Cayley table or other input failed validation. The message carries the witness.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed file (cayley-v1, dset-v1, hadamard-v1).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on inputs violating its stated precondition.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checked 64-bit arithmetic would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Enumeration cap (subgroup enumeration order cap, search node budget) exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t nodes, std::uint64_t found)
      : std::runtime_error(what), nodes_(nodes), found_(found) {}

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::uint64_t found() const noexcept { return found_; }

 private:
  std::uint64_t nodes_;
  std::uint64_t found_;
};

}  // namespace rshds
