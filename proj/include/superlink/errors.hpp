#pragma once

#include <stdexcept>
#include <string>

namespace superlink {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (weight literals, cycle strings, tables, flags).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A root datum could not be built for the requested family/parameters.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Operands of different dimension or from different data.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition failed (isotropic coroot, non-dominant nu, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The input lies outside what the library can decide (non-integral weights,
// singular orbits without a table, non-type-I freeness tests, ...).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed a configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A multiplicity table lacks entries needed by a computation.
class MissingTableEntry : public Error {
 public:
  using Error::Error;
};

}  // namespace superlink
