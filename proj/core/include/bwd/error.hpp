#pragma once

#include <stdexcept>
#include <string>

namespace bwd {

// Base class for every error raised by the library. Callers that only care
// about "something was wrong with the input" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonPrime : public Error {
 public:
  using Error::Error;
};

class FieldTooLarge : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class DegenerateFunction : public Error {
 public:
  using Error::Error;
};

class ExceptionalFunction : public Error {
 public:
  using Error::Error;
};

class SetTooSmall : public Error {
 public:
  using Error::Error;
};

class BadLambda : public Error {
 public:
  using Error::Error;
};

class BadArgument : public Error {
 public:
  using Error::Error;
};

class EmptyC : public Error {
 public:
  using Error::Error;
};

// Malformed set specs, rational-function strings, JSON configs, suite names.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace bwd
