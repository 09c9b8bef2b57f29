#pragma once

#include <stdexcept>
#include <string>

namespace arrangeclass {

/// Malformed or out-of-range user input. CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured cap (memory budget, class size, assignment budget) was hit.
/// CLI exit code 2.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed; indicates a bug or an input that violates a
/// precondition we could not check up front. CLI exit code 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace arrangeclass
