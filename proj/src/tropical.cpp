#include "lamina/tropical.hpp"

#include <numeric>
#include <sstream>

namespace lamina {

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::GL: return "GL";
    case GroupKind::SL: return "SL";
    case GroupKind::PGL: return "PGL";
  }
  return "?";
}

GroupKind group_kind_from_string(const std::string& s) {
  if (s == "GL") return GroupKind::GL;
  if (s == "SL") return GroupKind::SL;
  if (s == "PGL") return GroupKind::PGL;
  throw ParseError("unknown group kind: " + s);
}

Coweight::Coweight(GroupKind kind, std::vector<long long> entries)
    : kind_(kind), entries_(std::move(entries)) {
  if (entries_.empty()) throw KindMismatch("coweight must have positive length");
  if (kind_ == GroupKind::SL) {
    const long long total = std::accumulate(entries_.begin(), entries_.end(), 0LL);
    if (total != 0) throw KindMismatch("SL coweight entries must sum to 0");
  } else if (kind_ == GroupKind::PGL) {
    const long long last = entries_.back();
    for (auto& e : entries_) e -= last;
  }
}

long long pair_fundamental(const Coweight& cw, int i) {
  if (i < 1 || i > cw.size() - 1)
    throw IndexOutOfRange("fundamental weight index " + std::to_string(i) + " not in 1.." +
                          std::to_string(cw.size() - 1));
  long long s = 0;
  for (int k = 0; k < i; ++k) s += cw[k];
  return s;
}

Coweight neg_w0(const Coweight& cw) {
  std::vector<long long> e(cw.entries().rbegin(), cw.entries().rend());
  for (auto& x : e) x = -x;
  return Coweight(cw.kind(), std::move(e));
}

namespace {
void check_compatible(const Coweight& a, const Coweight& b) {
  if (a.kind() != b.kind() || a.size() != b.size())
    throw KindMismatch("coweights have different kind or length");
}
}  // namespace

Coweight operator+(const Coweight& a, const Coweight& b) {
  check_compatible(a, b);
  std::vector<long long> e(a.entries());
  for (int i = 0; i < b.size(); ++i) e[static_cast<std::size_t>(i)] += b[i];
  return Coweight(a.kind(), std::move(e));
}

Coweight operator-(const Coweight& a, const Coweight& b) { return a + (-b); }

Coweight operator-(const Coweight& a) {
  std::vector<long long> e(a.entries());
  for (auto& x : e) x = -x;
  return Coweight(a.kind(), std::move(e));
}

Coweight operator*(long long c, const Coweight& a) {
  std::vector<long long> e(a.entries());
  for (auto& x : e) x *= c;
  return Coweight(a.kind(), std::move(e));
}

bool is_dominant(const Coweight& cw) {
  for (int i = 0; i + 1 < cw.size(); ++i)
    if (cw[i] < cw[i + 1]) return false;
  return true;
}

Dominance dominance_compare(const Coweight& a, const Coweight& b) {
  check_compatible(a, b);
  const Coweight d = a - b;
  bool zero = true;
  for (long long e : d.entries())
    if (e != 0) zero = false;
  if (zero) return Dominance::Equal;
  if (is_dominant(d)) return Dominance::Greater;
  if (is_dominant(-d)) return Dominance::Less;
  return Dominance::Incomparable;
}

bool root_order_leq(const Coweight& a, const Coweight& b) {
  check_compatible(a, b);
  const Coweight d = b - a;
  long long partial = 0;
  for (int i = 0; i < d.size(); ++i) {
    partial += d[i];
    if (i + 1 < d.size() && partial < 0) return false;
  }
  return partial == 0;
}

std::string to_string(const Coweight& cw) {
  std::ostringstream out;
  out << to_string(cw.kind()) << "(";
  for (int i = 0; i < cw.size(); ++i) {
    if (i) out << ",";
    out << cw[i];
  }
  out << ")";
  return out.str();
}

DominantCoweight::DominantCoweight(Coweight cw) : value(std::move(cw)) {
  if (!is_dominant(value))
    throw KindMismatch("coweight is not dominant: " + to_string(value));
}

}  // namespace lamina
