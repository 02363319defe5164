#pragma once

#include <stdexcept>
#include <string>

namespace springerlab {

/// Input violates an operation's precondition (bad shape, mixed fields,
/// invalid label, non-small coweight). The CLI maps this to exit code 2.
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed request outside the implemented domain, e.g. the classical zero-weight table at l = 2.
class Unsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation gave up: step limits, failed constructions, hard
/// internal validation errors. The CLI maps this to exit code 3.
class ComputationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace springerlab
