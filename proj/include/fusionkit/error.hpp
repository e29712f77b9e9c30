#pragma once

#include <stdexcept>
#include <string>

namespace fusionkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input has the wrong shape (array lengths, out-of-range indices).
class StructuralError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was called on data that does not meet its contract, e.g. a
// character table requested for a non-commutative ring.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size cap was exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  NumericError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace fusionkit
