#pragma once

#include <stdexcept>
#include <string>

namespace strat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings (or backends).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The requested operation is not available for this ring or backend.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A structural invariant failed (d^2 != 0, shape mismatch, non-chain map).
class ValidationError : public Error {
 public:
  ValidationError(int degree, const std::string& what)
      : Error("degree " + std::to_string(degree) + ": " + what), degree_(degree) {}

  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

/// A self-check on a kernel computation failed. Always indicates an engine bug.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace strat
