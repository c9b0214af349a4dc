#pragma once

#include <stdexcept>
#include <string>

namespace gcoh {

// Input violates a documented precondition or invariant.  The CLI maps this
// to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An engine produced something its own invariants forbid.  Always a bug; the
// CLI maps this to exit code 1.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gcoh
