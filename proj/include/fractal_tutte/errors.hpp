#pragma once

#include <stdexcept>
#include <string>

namespace fractal_tutte {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (numbers, edge lists, JSON, family names).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A request exceeds a resource guard (generation cap, edge cap, enumeration size).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Arguments are well formed but outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exact division by (x-1) left a nonzero remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

}  // namespace fractal_tutte
