#pragma once

#include <gmpxx.h>

#include <string>

namespace lamina {

/// Exact rational scalar. GMP keeps values in lowest terms with a positive
/// denominator, which is exactly the invariant the series arithmetic needs.
using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q" (decimal digits). Throws ParseError.
Rational rational_from_string(const std::string& s);

/// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& q);

}  // namespace lamina
