#pragma once

#include <array>
#include <map>
#include <string>

#include "lamina/laurent.hpp"

namespace lamina {

/// Key of a face function: triangle vertices (ascending) and the index
/// triple (i, j, k), i+j+k = m, matched positionally to the vertices.
struct FaceKey {
  std::array<int, 3> tri;
  std::array<int, 3> ijk;
  auto operator<=>(const FaceKey&) const = default;
};

/// Key of an edge function: edge vertices (ascending) and the index pair.
struct EdgeKey {
  std::array<int, 2> edge;
  std::array<int, 2> ij;
  auto operator<=>(const EdgeKey&) const = default;
};

std::string to_string(const FaceKey& k);  // "face:a-b-c:i-j-k"
std::string to_string(const EdgeKey& k);  // "edge:a-b:i-j"
FaceKey face_key_from_string(const std::string& s);
EdgeKey edge_key_from_string(const std::string& s);

struct AChart {
  std::map<EdgeKey, LaurentSeries> edges;
  std::map<FaceKey, LaurentSeries> faces;
  bool operator==(const AChart&) const = default;
};

struct TropicalAChart {
  std::map<EdgeKey, long long> edges;
  std::map<FaceKey, long long> faces;
  bool operator==(const TropicalAChart&) const = default;
};

/// X-side charts carry face functions with all indices >= 1 and edge
/// functions on internal diagonals only.
struct XChart {
  std::map<EdgeKey, LaurentSeries> edges;
  std::map<FaceKey, LaurentSeries> faces;
  bool operator==(const XChart&) const = default;
};

struct TropicalXChart {
  std::map<EdgeKey, long long> edges;
  std::map<FaceKey, long long> faces;
  bool operator==(const TropicalXChart&) const = default;
};

}  // namespace lamina
