#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

// Input violates an operation's precondition. CLI exit status 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed table or file (wrong shape, out-of-range index). This is a
// precondition failure, kept distinct from a "false" validation flag.
class StructuralError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// An orbit cap, enumeration budget or similar resource limit was hit.
// CLI exit status 3.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A checked mathematical invariant failed. Always a bug; CLI exit status 1.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hurwitz
