#pragma once

#include <stdexcept>
#include <string>

namespace gsurj {

// A mathematical hypothesis needed by the requested computation does not
// hold for this input (bad reduction prime, model condition violated, ...).
// Distinct from std::invalid_argument, which flags malformed input.
class MathConditionError : public std::runtime_error {
 public:
  explicit MathConditionError(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed: a certified invariant (Weil bound, exact
// division in Newton's identities, lift stabilization) was violated.  This
// always indicates a bug or corrupted state, never a property of the input.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gsurj
