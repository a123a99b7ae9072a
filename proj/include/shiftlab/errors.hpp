#ifndef SHIFTLAB_ERRORS_HPP
#define SHIFTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shiftlab {

/// Base class for all shiftlab errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: bad rationals, parameter ranges, windows too small,
/// out-of-window access without a tail rule. CLI exit code 2.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// A diagram violates the commutativity relation where an operation
/// requires it. Carries the witness in the message. CLI exit code 2.
class CommutativityError : public InputError {
 public:
  explicit CommutativityError(const std::string& what) : InputError(what) {}
};

/// The request is valid but outside what the library supports
/// (rank > 2 recovery, irrational atoms, ...). CLI exit code 3.
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(what) {}
};

}  // namespace shiftlab

#endif
