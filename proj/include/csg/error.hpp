#pragma once

#include <stdexcept>
#include <string>

namespace csg {

// Base for every error raised by the library. The CLI maps the concrete
// subclass to a process exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: out-of-range players, ragged matrices, length mismatch.
class InputError : public Error {
 public:
  using Error::Error;
};

// Structurally well-formed input that violates a model invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A formula or map evaluated outside its stated domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Work that would exceed the desk-scale guardrails.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace csg
