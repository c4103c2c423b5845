#pragma once

#include <stdexcept>
#include <string>

namespace specdet {

// Thrown when an operation's input violates its documented preconditions.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed external data (graph6 lines, JSON documents).
class ParseError : public IoError {
 public:
  using IoError::IoError;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace specdet
