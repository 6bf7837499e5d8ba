#pragma once

#include <stdexcept>
#include <string>

namespace monocst {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in Clifford algebras with different generator counts.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the documented domain (grade, degree, table range).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Result would overflow double precision.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Truncation or node-doubling check failed to reach the requested tolerance.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

// Malformed signal description or configuration.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Input cannot be handled by the requested operation (e.g. no packet axis data).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

// Unknown suite names, malformed grids and other caller mistakes.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace monocst
