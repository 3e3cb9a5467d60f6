#pragma once

#include <stdexcept>
#include <string>

namespace ogkit {

// Base of every exception thrown by the library. The C API maps each
// subclass to one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was not met by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Input data violates an axiom that the operation relies on (only reachable
// on unvalidated input).
class AxiomError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

// The instance is outside what the operation supports (e.g. enumerating an
// infinite Hom-group).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace ogkit
