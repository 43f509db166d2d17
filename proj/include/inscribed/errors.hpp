#pragma once

#include <stdexcept>
#include <string>

namespace inscribed {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller supplied an argument outside the operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured resource ceiling (state count, subset count, ...) would be exceeded.
class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

// No verified rational generating function could be produced.
class FitError : public Error {
 public:
  using Error::Error;
};

// A cooperative cancellation request was honoured.
class Cancelled : public Error {
 public:
  Cancelled() : Error("operation cancelled") {}
};

// Deserialization failures. The three subclasses are distinct so callers can
// tell a damaged file from an incompatible one from a semantically wrong one.
class FormatError : public Error {
 public:
  using Error::Error;
};

class MalformedInput : public FormatError {
 public:
  explicit MalformedInput(const std::string& what)
      : FormatError("malformed input: " + what) {}
};

class VersionMismatch : public FormatError {
 public:
  explicit VersionMismatch(const std::string& what)
      : FormatError("version mismatch: " + what) {}
};

class InvariantViolation : public FormatError {
 public:
  explicit InvariantViolation(const std::string& what)
      : FormatError("invariant violation: " + what) {}
};

}  // namespace inscribed
