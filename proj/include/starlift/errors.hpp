#pragma once

#include <stdexcept>
#include <string>

namespace starlift {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Binary operation on series of different precisions.
struct PrecisionMismatch : Error {
  using Error::Error;
};

// Matrix operands of incompatible dimensions.
struct DimensionMismatch : Error {
  using Error::Error;
};

// Polynomials over different symplectic variable sets.
struct VariableMismatch : Error {
  using Error::Error;
};

// Operands from coefficient fields with different moduli.
struct FieldMismatch : Error {
  using Error::Error;
};

// Element of a base algebra has no two-sided inverse.
struct NotInvertible : Error {
  using Error::Error;
};

// Series inversion refused: the classical limit a0 is not a unit, so by the
// invertibility criterion no star-inverse exists at any precision.
struct NotInvertibleAtClassicalLimit : NotInvertible {
  using NotInvertible::NotInvertible;
};

// A stated precondition of an operation does not hold (non-idempotent input,
// unequal classical limits, out-of-range truncation index, ...).
struct PreconditionViolation : Error {
  using Error::Error;
};

// Idempotent lifting over a field of characteristic 2: 2a-1 degenerates.
struct CharacteristicTwo : PreconditionViolation {
  using PreconditionViolation::PreconditionViolation;
};

// Malformed or inconsistent run configuration (CLI exit code 2).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace starlift
