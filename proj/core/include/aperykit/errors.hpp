#ifndef APERYKIT_ERRORS_HPP
#define APERYKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace aperykit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad generator list, wrong vector length, bad index set.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotAMember : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Some generator is a nonnegative combination of the others.
class NonMinimalGenerators : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class LengthMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidOrder : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidPermutation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidLambda : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class OrderNotElimination : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class BadAxes : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A generator outside pos(Lambda).
class ConeMismatch : public InvalidArgument {
 public:
  ConeMismatch(std::size_t generator, const std::string& what)
      : InvalidArgument(what), generator_(generator) {}
  std::size_t generator() const noexcept { return generator_; }

 private:
  std::size_t generator_;
};

/// A membership scan would exceed the configured bound (APERYKIT_MAX_SCAN).
class ScanLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Exponent or weight arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Never expected.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace aperykit

#endif  // APERYKIT_ERRORS_HPP
