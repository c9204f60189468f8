#pragma once

#include <stdexcept>
#include <string>

namespace supratoa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// H - V(q') <= 0 somewhere between the arrival point and q.
class NotAccessible : public Error {
 public:
  using Error::Error;
};

class ZeroMomentum : public Error {
 public:
  ZeroMomentum() : Error("momentum p must be nonzero") {}
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

class ArgumentTooNegative : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// Weyl quantization was handed a series carrying hbar^2 grades.
class GradeError : public Error {
 public:
  using Error::Error;
};

class ZeroOverlap : public Error {
 public:
  using Error::Error;
};

}  // namespace supratoa
