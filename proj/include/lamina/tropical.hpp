#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "lamina/errors.hpp"

namespace lamina {

/// Tropical scalar: integers under (max, +).
using Trop = long long;

inline Trop trop_add(Trop a, Trop b) { return std::max(a, b); }
inline Trop trop_mul(Trop a, Trop b) { return a + b; }
inline Trop trop_div(Trop a, Trop b) { return a - b; }

enum class GroupKind { GL, SL, PGL };

std::string to_string(GroupKind k);
GroupKind group_kind_from_string(const std::string& s);

/// An integer m-tuple in the coweight lattice of GL_m, SL_m or PGL_m.
/// SL entries sum to zero; PGL tuples are canonicalized so the last entry
/// is zero (the quotient by the diagonal copy of Z).
class Coweight {
 public:
  Coweight(GroupKind kind, std::vector<long long> entries);

  static Coweight zero(GroupKind kind, int m) {
    return Coweight(kind, std::vector<long long>(static_cast<std::size_t>(m), 0));
  }

  GroupKind kind() const { return kind_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<long long>& entries() const { return entries_; }
  long long operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }

  bool operator==(const Coweight& o) const = default;

 private:
  GroupKind kind_;
  std::vector<long long> entries_;
};

/// <lambda, omega_i> = lambda_1 + ... + lambda_i for 1 <= i <= m-1.
long long pair_fundamental(const Coweight& cw, int i);

/// lambda -> (-lambda_m, ..., -lambda_1); an involution.
Coweight neg_w0(const Coweight& cw);

Coweight operator+(const Coweight& a, const Coweight& b);
Coweight operator-(const Coweight& a, const Coweight& b);
Coweight operator-(const Coweight& a);
Coweight operator*(long long c, const Coweight& a);

bool is_dominant(const Coweight& cw);

enum class Dominance { Greater, Less, Equal, Incomparable };

/// The partial order with lambda > mu iff lambda - mu is dominant
/// (weakly decreasing entries after the kind's normalization).
Dominance dominance_compare(const Coweight& a, const Coweight& b);

/// The standard root-lattice order: a <= b iff partial sums of b - a are
/// all >= 0 and the totals agree. Used by the triangle-inequality tests.
bool root_order_leq(const Coweight& a, const Coweight& b);

std::string to_string(const Coweight& cw);

/// A coweight with weakly decreasing entries.
struct DominantCoweight {
  explicit DominantCoweight(Coweight cw);
  Coweight value;
  bool operator==(const DominantCoweight& o) const = default;
};

}  // namespace lamina
