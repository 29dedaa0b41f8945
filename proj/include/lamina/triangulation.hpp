#pragma once

#include <array>
#include <utility>
#include <vector>

#include "lamina/errors.hpp"

namespace lamina {

/// A triangulation of the convex n-gon with vertices 1..n in cyclic order.
/// Triangles are stored as ascending triples, the list sorted, so equal
/// triangulations compare equal.
struct Triangulation {
  int n = 0;
  std::vector<std::array<int, 3>> triangles;

  bool operator==(const Triangulation& o) const = default;
};

void normalize(Triangulation& t);
bool is_valid_triangulation(const Triangulation& t);

Triangulation fan_triangulation(int n);

/// All triangulations of the n-gon (Catalan many). Unsupported for n > 8.
std::vector<Triangulation> all_triangulations(int n);

/// Boundary edges plus internal diagonals, each as an ascending pair, sorted.
std::vector<std::pair<int, int>> all_edges(const Triangulation& t);
std::vector<std::pair<int, int>> internal_diagonals(const Triangulation& t);
bool is_internal(const Triangulation& t, std::pair<int, int> edge);

struct FlipMove {
  std::pair<int, int> diagonal;
};

/// The quadrilateral around an internal diagonal, in cyclic vertex order
/// (q[0], q[1], q[2], q[3]) with the diagonal = (q[0], q[2]).
std::array<int, 4> flip_quadrilateral(const Triangulation& t, std::pair<int, int> diagonal);

/// Replaces the diagonal by the opposite one of its quadrilateral.
Triangulation flip(const Triangulation& t, const FlipMove& move);

/// A flip sequence from one triangulation to another (BFS; always exists).
std::vector<FlipMove> flip_path(const Triangulation& from, const Triangulation& to);

}  // namespace lamina
