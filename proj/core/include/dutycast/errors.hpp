#pragma once

#include <stdexcept>
#include <string>

namespace dutycast {

// Malformed networks, trees, schedules or configs.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input with no solution (disconnected terminals, uncoverable
// terminal, topology generator out of retries).
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive oracle refused to run because the instance exceeds its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal invariant violated (e.g. the distributed protocol failed to make
// progress). Indicates a bug, not bad input.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dutycast
