#pragma once

#include <stdexcept>
#include <string>

namespace mist {

/// Thrown when an input violates an operation's documented precondition
/// (disconnected graph, overlapping vertex sets, size guard exceeded, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal combinatorial invariant fails. On valid input this
/// indicates a bug; when replaying an external trace it names the broken check.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed graph or trace document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mist
