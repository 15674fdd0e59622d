#pragma once

#include <stdexcept>
#include <string>

namespace mz {

// Bad input: non prime power q, malformed class spec, wrong group for an operation.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured enumeration or table-size cap would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal exactness check failed (e.g. a sum that must be rational was not).
// Always indicates a bug in a table or formula, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mz
