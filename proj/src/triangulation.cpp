#include "lamina/triangulation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace lamina {

void normalize(Triangulation& t) {
  for (auto& tri : t.triangles) std::sort(tri.begin(), tri.end());
  std::sort(t.triangles.begin(), t.triangles.end());
}

namespace {

bool is_boundary(int n, int a, int b) {
  return b - a == 1 || (a == 1 && b == n);
}

bool diagonals_cross(std::pair<int, int> d1, std::pair<int, int> d2) {
  const auto [a, b] = d1;
  const auto [c, d] = d2;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

}  // namespace

bool is_valid_triangulation(const Triangulation& t) {
  if (t.n < 3) return false;
  if (static_cast<int>(t.triangles.size()) != t.n - 2) return false;
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& tri : t.triangles) {
    auto s = tri;
    std::sort(s.begin(), s.end());
    if (s[0] == s[1] || s[1] == s[2]) return false;
    if (s[0] < 1 || s[2] > t.n) return false;
    ++edge_count[{s[0], s[1]}];
    ++edge_count[{s[1], s[2]}];
    ++edge_count[{s[0], s[2]}];
  }
  std::vector<std::pair<int, int>> diagonals;
  for (const auto& [e, c] : edge_count) {
    if (is_boundary(t.n, e.first, e.second)) {
      if (c != 1) return false;
    } else {
      if (c != 2) return false;
      diagonals.push_back(e);
    }
  }
  if (static_cast<int>(diagonals.size()) != t.n - 3) return false;
  for (std::size_t i = 0; i < diagonals.size(); ++i)
    for (std::size_t j = i + 1; j < diagonals.size(); ++j)
      if (diagonals_cross(diagonals[i], diagonals[j])) return false;
  return true;
}

Triangulation fan_triangulation(int n) {
  if (n < 3) throw Unsupported("triangulations need n >= 3");
  Triangulation t;
  t.n = n;
  for (int k = 2; k < n; ++k) t.triangles.push_back({1, k, k + 1});
  normalize(t);
  return t;
}

namespace {

void enumerate_rec(const std::vector<int>& verts, std::vector<std::array<int, 3>>& acc,
                   std::vector<std::vector<std::array<int, 3>>>& out) {
  if (verts.size() < 3) {
    out.push_back(acc);
    return;
  }
  const int first = verts.front();
  const int last = verts.back();
  for (std::size_t k = 1; k + 1 < verts.size(); ++k) {
    acc.push_back({first, verts[k], last});
    std::vector<int> left(verts.begin(), verts.begin() + static_cast<long>(k) + 1);
    std::vector<int> right(verts.begin() + static_cast<long>(k), verts.end());
    std::vector<std::vector<std::array<int, 3>>> lefts;
    std::vector<std::array<int, 3>> tmp;
    enumerate_rec(left, tmp, lefts);
    for (auto& l : lefts) {
      auto saved = acc;
      for (const auto& tri : l) acc.push_back(tri);
      enumerate_rec(right, acc, out);
      acc = saved;
    }
    acc.pop_back();
  }
}

}  // namespace

std::vector<Triangulation> all_triangulations(int n) {
  if (n < 3) throw Unsupported("triangulations need n >= 3");
  if (n > 8) throw Unsupported("exhaustive triangulation enumeration is capped at n = 8");
  std::vector<int> verts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<std::array<int, 3>>> sets;
  std::vector<std::array<int, 3>> acc;
  enumerate_rec(verts, acc, sets);
  std::vector<Triangulation> out;
  out.reserve(sets.size());
  for (auto& s : sets) {
    Triangulation t;
    t.n = n;
    t.triangles = std::move(s);
    normalize(t);
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(),
            [](const Triangulation& a, const Triangulation& b) { return a.triangles < b.triangles; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<int, int>> all_edges(const Triangulation& t) {
  std::set<std::pair<int, int>> edges;
  for (const auto& tri : t.triangles) {
    edges.insert({tri[0], tri[1]});
    edges.insert({tri[1], tri[2]});
    edges.insert({tri[0], tri[2]});
  }
  return {edges.begin(), edges.end()};
}

std::vector<std::pair<int, int>> internal_diagonals(const Triangulation& t) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : all_edges(t))
    if (!is_boundary(t.n, e.first, e.second)) out.push_back(e);
  return out;
}

bool is_internal(const Triangulation& t, std::pair<int, int> edge) {
  if (edge.first > edge.second) std::swap(edge.first, edge.second);
  if (is_boundary(t.n, edge.first, edge.second)) return false;
  const auto d = internal_diagonals(t);
  return std::find(d.begin(), d.end(), edge) != d.end();
}

std::array<int, 4> flip_quadrilateral(const Triangulation& t, std::pair<int, int> diagonal) {
  if (diagonal.first > diagonal.second) std::swap(diagonal.first, diagonal.second);
  if (!is_internal(t, diagonal))
    throw NotInternal("edge (" + std::to_string(diagonal.first) + "," +
                      std::to_string(diagonal.second) + ") is not an internal diagonal");
  std::vector<int> apexes;
  for (const auto& tri : t.triangles) {
    int hits = 0;
    int other = 0;
    for (int v : tri) {
      if (v == diagonal.first || v == diagonal.second)
        ++hits;
      else
        other = v;
    }
    if (hits == 2) apexes.push_back(other);
  }
  // Cyclic order around a convex polygon is ascending vertex order, with the
  // diagonal separating the two apexes.
  std::array<int, 4> q{diagonal.first, 0, diagonal.second, 0};
  const int x = std::min(apexes[0], apexes[1]);
  const int y = std::max(apexes[0], apexes[1]);
  if (diagonal.first < x && x < diagonal.second) {
    q[1] = x;
    q[3] = y;
  } else {
    q[1] = y;
    q[3] = x;
  }
  return q;
}

Triangulation flip(const Triangulation& t, const FlipMove& move) {
  const auto q = flip_quadrilateral(t, move.diagonal);
  auto d = move.diagonal;
  if (d.first > d.second) std::swap(d.first, d.second);
  Triangulation out;
  out.n = t.n;
  for (const auto& tri : t.triangles) {
    const bool has_a = std::find(tri.begin(), tri.end(), d.first) != tri.end();
    const bool has_b = std::find(tri.begin(), tri.end(), d.second) != tri.end();
    if (!(has_a && has_b)) out.triangles.push_back(tri);
  }
  out.triangles.push_back({q[1], q[3], q[0]});
  out.triangles.push_back({q[1], q[3], q[2]});
  normalize(out);
  return out;
}

std::vector<FlipMove> flip_path(const Triangulation& from, const Triangulation& to) {
  if (from.n != to.n) throw Unsupported("flip path between different polygon sizes");
  if (from == to) return {};
  std::map<std::vector<std::array<int, 3>>, std::pair<std::vector<std::array<int, 3>>, FlipMove>>
      parent;
  std::queue<Triangulation> queue;
  queue.push(from);
  parent[from.triangles] = {from.triangles, FlipMove{{0, 0}}};
  while (!queue.empty()) {
    Triangulation cur = queue.front();
    queue.pop();
    for (const auto& d : internal_diagonals(cur)) {
      Triangulation next = flip(cur, FlipMove{d});
      if (parent.count(next.triangles)) continue;
      parent[next.triangles] = {cur.triangles, FlipMove{d}};
      if (next == to) {
        std::vector<FlipMove> path;
        auto key = next.triangles;
        while (key != from.triangles) {
          const auto& [prev, move] = parent[key];
          path.push_back(move);
          key = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push(next);
    }
  }
  throw Unsupported("flip graph search failed");
}

}  // namespace lamina
