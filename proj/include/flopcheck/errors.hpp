#pragma once

#include <stdexcept>
#include <string>

namespace flopcheck {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A weight or partition that is not weakly decreasing (or has negative
/// parts where a partition is required).
class InvalidWeight : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// Arguments outside the range where an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A well-formed request the engine deliberately does not handle.
class Unsupported : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace flopcheck
