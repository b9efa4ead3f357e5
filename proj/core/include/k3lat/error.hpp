#pragma once

#include <stdexcept>
#include <string>

namespace k3lat {

// Base class of everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally malformed input: non-square or non-symmetric Gram matrices,
// dimension mismatches, unparsable numbers.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a mathematical precondition (degenerate
// lattice, wrong residue class, indefinite where definite is required), or
// a computation whose result contradicts its own certificate.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

[[noreturn]] inline void fail_invalid(const std::string& msg) { throw InvalidArgument(msg); }
[[noreturn]] inline void fail_precondition(const std::string& msg) { throw PreconditionError(msg); }

}  // namespace k3lat
