#pragma once

#include <stdexcept>
#include <string>

namespace lamina {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Division by the exact-zero series.
struct DivisionByZero : Error {
  using Error::Error;
};

/// Valuation (or positivity) queried on the exact-zero series.
struct ZeroValuation : Error {
  using Error::Error;
};

/// A result could not be certified within the current truncation window.
/// Callers retry the whole computation at doubled precision (see
/// retrying_precision in laurent.hpp).
struct PrecisionExhausted : Error {
  using Error::Error;
};

/// A chart value is exactly zero: the configuration is not generic.
struct DegenerateConfiguration : Error {
  using Error::Error;
};

/// A linear solve inside reconstruction was singular.
struct DegenerateSystem : Error {
  using Error::Error;
};

/// Coweights of different lengths or group kinds were combined.
struct KindMismatch : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

/// Requested rank/size is outside the implemented range.
struct Unsupported : Error {
  using Error::Error;
};

/// Good-lift gap search exceeded its schedule.
struct SearchExhausted : Error {
  using Error::Error;
};

/// Gluing edges whose coordinates cannot be equalized by a shift raise.
struct EdgeMismatch : Error {
  using Error::Error;
};

/// Annulus gluing matrix does not carry one edge's flags to the other's.
struct IncompatibleGluing : Error {
  using Error::Error;
};

/// Newton polygon of a characteristic polynomial has non-integer slopes.
struct NonIntegralSlopes : Error {
  using Error::Error;
};

/// Every minor of a lattice triple vanished: the tropical coordinate is -inf.
struct MinusInfinity : Error {
  using Error::Error;
};

/// Flip requested on a non-internal diagonal.
struct NotInternal : Error {
  using Error::Error;
};

/// Numeric path evaluation left its precision budget.
struct NonConvergent : Error {
  using Error::Error;
};

/// Malformed input file or JSON document.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace lamina
