#include "lamina/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace lamina {

namespace {
thread_local long g_precision = 64;
constexpr long kInfWindow = std::numeric_limits<long>::max() / 4;
}  // namespace

long series_precision() { return g_precision; }

void set_series_precision(long rel) {
  if (rel < 1) throw Unsupported("series precision must be positive");
  g_precision = rel;
}

void LaurentSeries::canonicalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    if (exact_) {
      lo_ = 0;
      trunc_ = 0;
    } else {
      lo_ = trunc_;
    }
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    lo_ += static_cast<long>(lead);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (exact_) trunc_ = lo_ + static_cast<long>(coeffs_.size());
}

LaurentSeries LaurentSeries::monomial(const Rational& c, long exp) {
  LaurentSeries s;
  if (c == 0) return s;
  s.lo_ = exp;
  s.coeffs_ = {c};
  s.trunc_ = exp + 1;
  s.exact_ = true;
  return s;
}

LaurentSeries LaurentSeries::from_coeffs(long lo, std::vector<Rational> coeffs) {
  LaurentSeries s;
  s.lo_ = lo;
  s.coeffs_ = std::move(coeffs);
  s.exact_ = true;
  s.canonicalize();
  return s;
}

LaurentSeries LaurentSeries::truncated(long lo, std::vector<Rational> coeffs, long trunc) {
  if (lo + static_cast<long>(coeffs.size()) > trunc)
    throw Unsupported("truncated(): coefficients extend past the window");
  LaurentSeries s;
  s.lo_ = lo;
  s.coeffs_ = std::move(coeffs);
  s.trunc_ = trunc;
  s.exact_ = false;
  s.canonicalize();
  return s;
}

LaurentSeries LaurentSeries::unknown_below(long trunc) {
  LaurentSeries s;
  s.lo_ = trunc;
  s.trunc_ = trunc;
  s.exact_ = false;
  return s;
}

long LaurentSeries::valuation() const {
  if (is_exact_zero()) throw ZeroValuation("valuation of the exact zero series");
  if (window_empty())
    throw PrecisionExhausted("valuation not certified below t^" + std::to_string(trunc_));
  return lo_;
}

bool LaurentSeries::is_positive() const { return leading() > 0; }

const Rational& LaurentSeries::leading() const {
  if (is_exact_zero()) throw ZeroValuation("leading coefficient of the exact zero series");
  if (window_empty())
    throw PrecisionExhausted("leading term not certified below t^" + std::to_string(trunc_));
  return coeffs_.front();
}

Rational LaurentSeries::coeff(long e) const {
  if (coeffs_.empty()) {
    if (exact_) return Rational(0);
    if (e < trunc_) return Rational(0);
    throw PrecisionExhausted("coefficient beyond the known window");
  }
  if (e < lo_) return Rational(0);
  if (e < lo_ + static_cast<long>(coeffs_.size())) return coeffs_[static_cast<std::size_t>(e - lo_)];
  if (exact_ || e < trunc_) return Rational(0);
  throw PrecisionExhausted("coefficient beyond the known window");
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const long w = std::min(a.window_end(), b.window_end());
  long lo = std::min(a.coeffs_.empty() ? a.trunc_ : a.lo_, b.coeffs_.empty() ? b.trunc_ : b.lo_);
  lo = std::min(lo, w);
  LaurentSeries r;
  r.exact_ = (w >= LaurentSeries::kInf);
  r.trunc_ = r.exact_ ? 0 : w;
  r.lo_ = lo;
  const long hi = std::min<long>(w, std::max(a.lo_ + static_cast<long>(a.coeffs_.size()),
                                             b.lo_ + static_cast<long>(b.coeffs_.size())));
  if (hi > lo) {
    r.coeffs_.assign(static_cast<std::size_t>(hi - lo), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      const long e = a.lo_ + static_cast<long>(i);
      if (e < hi) r.coeffs_[static_cast<std::size_t>(e - lo)] += a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
      const long e = b.lo_ + static_cast<long>(i);
      if (e < hi) r.coeffs_[static_cast<std::size_t>(e - lo)] += b.coeffs_[i];
    }
  }
  r.canonicalize();
  return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.is_exact_zero() || b.is_exact_zero()) return LaurentSeries::zero();
  const long lo_a = a.coeffs_.empty() ? a.trunc_ : a.lo_;
  const long lo_b = b.coeffs_.empty() ? b.trunc_ : b.lo_;
  long w = LaurentSeries::kInf;
  if (!a.exact_) w = std::min(w, a.trunc_ + lo_b);
  if (!b.exact_) w = std::min(w, b.trunc_ + lo_a);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return LaurentSeries::unknown_below(w);
  LaurentSeries r;
  r.exact_ = (w >= LaurentSeries::kInf);
  r.lo_ = a.lo_ + b.lo_;
  r.trunc_ = r.exact_ ? 0 : w;
  const long full = static_cast<long>(a.coeffs_.size() + b.coeffs_.size()) - 1;
  const long len = r.exact_ ? full : std::min(full, w - r.lo_);
  if (len > 0) {
    r.coeffs_.assign(static_cast<std::size_t>(len), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        const long off = static_cast<long>(i + j);
        if (off >= len) break;
        r.coeffs_[static_cast<std::size_t>(off)] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
  }
  r.canonicalize();
  return r;
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
  if (b.is_exact_zero()) throw DivisionByZero("division by the exact zero series");
  if (b.window_empty())
    throw PrecisionExhausted("divisor's leading term not certified below t^" +
                             std::to_string(b.trunc_));
  if (a.is_exact_zero()) return LaurentSeries::zero();
  if (a.window_empty()) return LaurentSeries::unknown_below(a.trunc_ - b.lo_);
  // Monomial divisor: exactness survives.
  if (b.coeffs_.size() == 1) {
    LaurentSeries r = a;
    r.lo_ -= b.lo_;
    if (!r.exact_) r.trunc_ -= b.lo_;
    for (auto& c : r.coeffs_) c /= b.coeffs_.front();
    r.canonicalize();
    return r;
  }
  const bool both_exact = a.exact_ && b.exact_;
  long rel = LaurentSeries::kInf;
  if (!a.exact_) rel = std::min(rel, a.trunc_ - a.lo_);
  if (!b.exact_) rel = std::min(rel, b.trunc_ - b.lo_);
  if (rel >= LaurentSeries::kInf) rel = series_precision();

  const long lo_r = a.lo_ - b.lo_;
  const long end = lo_r + rel;
  std::vector<Rational> q(static_cast<std::size_t>(rel), Rational(0));
  LaurentSeries rem = a;
  long window = end;
  bool exact_result = false;
  while (true) {
    if (rem.is_exact_zero()) {
      exact_result = both_exact;
      break;
    }
    if (rem.window_empty()) {
      window = std::min(window, rem.trunc_ - b.lo_);
      break;
    }
    const long e = rem.lo_ - b.lo_;
    if (e >= end) break;
    const Rational c = rem.coeffs_.front() / b.coeffs_.front();
    q[static_cast<std::size_t>(e - lo_r)] = c;
    rem = rem - LaurentSeries::monomial(c, e) * b;
  }
  LaurentSeries r;
  r.lo_ = lo_r;
  r.coeffs_ = std::move(q);
  r.exact_ = exact_result;
  r.trunc_ = exact_result ? 0 : window;
  if (!exact_result && r.lo_ + static_cast<long>(r.coeffs_.size()) > r.trunc_)
    r.coeffs_.resize(static_cast<std::size_t>(std::max<long>(0, r.trunc_ - r.lo_)));
  r.canonicalize();
  return r;
}

bool agrees(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.exact() && b.exact()) return a == b;
  const long w = std::min(a.exact() ? std::numeric_limits<long>::max() / 4 : a.trunc(),
                          b.exact() ? std::numeric_limits<long>::max() / 4 : b.trunc());
  long lo = w;
  if (a.is_certified_nonzero()) lo = std::min(lo, a.lo());
  if (b.is_certified_nonzero()) lo = std::min(lo, b.lo());
  for (long e = lo; e < w; ++e) {
    if (a.coeff(e) != b.coeff(e)) return false;
  }
  return true;
}

LaurentSeries inverse(const LaurentSeries& a) { return LaurentSeries::from_int(1) / a; }

std::string to_string(const LaurentSeries& a) {
  if (a.is_exact_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const Rational& c = a.coeffs()[i];
    if (c == 0) continue;
    const long e = a.lo() + static_cast<long>(i);
    if (!first) out << (c > 0 ? " + " : " - ");
    const Rational mag = (c > 0 || first) ? c : Rational(-c);
    if (e == 0) {
      out << rational_to_string(mag);
    } else {
      if (mag != 1 && mag != -1) out << rational_to_string(mag) << "*";
      if (first && mag == -1) out << "-";
      out << "t";
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  if (!a.exact()) {
    if (!first) out << " + ";
    out << "O(t^" << a.trunc() << ")";
  }
  return out.str();
}

PositiveWitness certify_positive(LaurentSeries s) {
  if (!s.is_positive()) throw DegenerateConfiguration("series is not positive: " + to_string(s));
  return PositiveWitness{std::move(s), true};
}

}  // namespace lamina
