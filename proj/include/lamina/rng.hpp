#pragma once

#include <cstdint>

#include "lamina/rational.hpp"

namespace lamina {

/// Deterministic splitmix64 generator. Self-contained so that seeded runs
/// produce identical streams on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi] (tiny modulo bias, irrelevant here).
  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return (next_u64() & 1) != 0; }

  /// A positive rational with numerator and denominator in [1, bound].
  Rational positive_rational(long bound) {
    Rational q(uniform(1, bound), uniform(1, bound));
    q.canonicalize();
    return q;
  }

  /// A nonzero rational, either sign.
  Rational nonzero_rational(long bound) {
    Rational q = positive_rational(bound);
    return coin() ? q : Rational(-q);
  }

 private:
  std::uint64_t state_;
};

}  // namespace lamina
