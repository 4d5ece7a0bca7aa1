#pragma once

#include <stdexcept>
#include <string>

namespace fglops {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
  public:
    using Error::Error;
};

class NotAUnit : public Error {
  public:
    using Error::Error;
};

class NonConvergent : public Error {
  public:
    using Error::Error;
};

class UnknownVariable : public Error {
  public:
    using Error::Error;
};

class OutOfBounds : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// Numeric a1 of a candidate Chern series is not +1 or -1.
class UnitViolation : public Error {
  public:
    using Error::Error;
};

} // namespace fglops
