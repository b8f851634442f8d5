#pragma once

#include <stdexcept>
#include <string>

namespace voi {

// Caller passed an argument outside the operation's domain (bad index, bad reward).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation invoked in a state it does not accept (unvisited arm, no budget left).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Experiment or match description failed validation.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds an explicit computational limit.
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace voi
