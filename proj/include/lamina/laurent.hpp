#pragma once

#include <limits>
#include <string>
#include <vector>

#include "lamina/errors.hpp"
#include "lamina/rational.hpp"

namespace lamina {

/// Relative truncation window used when an operation (series division by a
/// non-monomial, mainly) has to cut an infinite expansion. Thread-local,
/// defaults to 64 coefficients past the leading exponent.
long series_precision();
void set_series_precision(long rel);

/// RAII override of the thread-local precision.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(long rel) : saved_(series_precision()) { set_series_precision(rel); }
  ~ScopedPrecision() { set_series_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  long saved_;
};

/// Runs f at the current precision, retrying with doubled precision on
/// PrecisionExhausted up to 1024 coefficients, then rethrows.
template <typename F>
auto retrying_precision(F&& f) {
  long rel = series_precision();
  for (;;) {
    try {
      ScopedPrecision guard(rel);
      return f();
    } catch (const PrecisionExhausted&) {
      if (rel >= 1024) throw;
      rel *= 2;
    }
  }
}

/// Truncated formal Laurent series with exact rational coefficients.
///
/// A value is one of:
///  - the exact zero (empty coefficients, exact() true),
///  - an exact finite sum of monomials (exact() true),
///  - a series known modulo t^trunc(): stored coefficients cover
///    [lo(), trunc()) and nothing is claimed beyond,
///  - a window-empty value: no coefficient is certified, the value is
///    some element of O(t^trunc()). Valuation queries on it raise
///    PrecisionExhausted.
///
/// The representation is canonical: a nonzero value has a nonzero leading
/// and trailing stored coefficient.
class LaurentSeries {
 public:
  LaurentSeries() = default;  // exact zero

  static LaurentSeries zero() { return LaurentSeries(); }
  static LaurentSeries from_rational(const Rational& c) { return monomial(c, 0); }
  static LaurentSeries from_int(long v) { return monomial(Rational(v), 0); }
  static LaurentSeries monomial(const Rational& c, long exp);
  static LaurentSeries t_power(long exp) { return monomial(Rational(1), exp); }
  /// Exact polynomial with the given lowest exponent.
  static LaurentSeries from_coeffs(long lo, std::vector<Rational> coeffs);
  /// Series known modulo t^trunc only.
  static LaurentSeries truncated(long lo, std::vector<Rational> coeffs, long trunc);
  /// The window-empty value O(t^trunc).
  static LaurentSeries unknown_below(long trunc);

  bool is_exact_zero() const { return coeffs_.empty() && exact_; }
  bool window_empty() const { return coeffs_.empty() && !exact_; }
  /// True when at least one coefficient is certified nonzero.
  bool is_certified_nonzero() const { return !coeffs_.empty(); }
  bool exact() const { return exact_; }

  long lo() const { return lo_; }
  /// Exclusive end of the known coefficient window. For exact values this is
  /// lo() + size(), but every higher coefficient is also known to be zero.
  long trunc() const { return trunc_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Valuation of a nonzero series. Throws ZeroValuation on the exact zero
  /// and PrecisionExhausted on a window-empty value.
  long valuation() const;
  /// True iff the leading coefficient is strictly positive. Same errors as
  /// valuation().
  bool is_positive() const;
  const Rational& leading() const;
  /// Coefficient of t^e. Throws PrecisionExhausted when e lies outside the
  /// known window of an inexact value.
  Rational coeff(long e) const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);

  /// Strict canonical-representation equality (value, window and exactness).
  bool operator==(const LaurentSeries& o) const = default;

 private:
  static constexpr long kInf = std::numeric_limits<long>::max() / 4;
  long window_end() const { return exact_ ? kInf : trunc_; }
  void canonicalize();

  long lo_ = 0;
  std::vector<Rational> coeffs_;
  long trunc_ = 0;
  bool exact_ = true;
};

/// Equality of the values on the common known window (truncation-tolerant).
bool agrees(const LaurentSeries& a, const LaurentSeries& b);

LaurentSeries inverse(const LaurentSeries& a);

/// Valuation via the spec'd name; -val is the tropicalization primitive.
inline long valuation(const LaurentSeries& a) { return a.valuation(); }
inline bool is_positive(const LaurentSeries& a) { return a.is_positive(); }
inline long neg_val(const LaurentSeries& a) { return -a.valuation(); }

std::string to_string(const LaurentSeries& a);

/// A series certified to lie in K_{>0}. The factory throws if the leading
/// coefficient is not strictly positive.
struct PositiveWitness {
  LaurentSeries series;
  bool leading_sign_checked = false;
};

PositiveWitness certify_positive(LaurentSeries s);

}  // namespace lamina
