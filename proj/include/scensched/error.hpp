#pragma once

#include <stdexcept>
#include <string>

namespace scensched {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation does not hold (wrong K, non-unit weights,
/// malformed input, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A configurable size guard (enumeration size, state count, overflow budget)
/// was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace scensched
