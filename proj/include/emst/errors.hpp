#pragma once

#include <stdexcept>
#include <string>

namespace emst {

// Malformed or degenerate input (parse errors, duplicate sites, NaN).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An allocation would push the workspace past its cap.
class WorkspaceExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal structural invariant failed. Always a bug or an unsupported
// degenerate configuration; never silently recovered from.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace emst
