#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lamina/charts.hpp"
#include "lamina/smatrix.hpp"
#include "lamina/triangulation.hpp"
#include "lamina/tropical.hpp"

namespace lamina {

/// A principal affine flag: an m x m matrix over K whose column prefixes
/// span the flag subspaces. For SL the determinant is exactly 1.
struct AffineFlag {
  SeriesMatrix columns;
  bool unimodular = true;
};

/// Cyclically ordered configuration of n affine flags in K^m.
struct FlagConfig {
  int m = 0;
  int n = 0;
  std::vector<AffineFlag> flags;

  const AffineFlag& flag(int vertex) const { return flags[static_cast<std::size_t>(vertex - 1)]; }
  AffineFlag& flag(int vertex) { return flags[static_cast<std::size_t>(vertex - 1)]; }
};

/// All index triples (i, j, k) with i+j+k = m and 0 <= i, j, k <= m-1.
std::vector<std::array<int, 3>> chart_index_triples(int m);

/// det of (first i columns of a, first j of b, first k of c). i+j+k = m.
LaurentSeries f_ijk(const AffineFlag& a, const AffineFlag& b, const AffineFlag& c, int i, int j,
                    int k);

/// Edge function f_{i,j,0} on an ordered pair of flags, i + j = m.
LaurentSeries f_edge(const AffineFlag& a, const AffineFlag& b, int i, int j);

/// Every face and edge function of the triangulation, exactly. Raises
/// DegenerateConfiguration on an exact-zero value and PrecisionExhausted on
/// an uncertifiable one.
AChart a_chart(const FlagConfig& config, const Triangulation& tri);

bool is_positive_chart(const AChart& chart);

/// Scales column k by t^(-lambda_k). Preserves unimodularity exactly when
/// lambda sums to zero.
AffineFlag torus_act(const AffineFlag& flag, const Coweight& lambda);
FlagConfig torus_act(const FlagConfig& config, const std::vector<Coweight>& lambdas);

/// Fan-chart values certified positive, as consumed by the reconstruction.
struct PositiveAChart {
  std::map<EdgeKey, PositiveWitness> edges;
  std::map<FaceKey, PositiveWitness> faces;
};

PositiveAChart certify_chart(const AChart& chart);

/// Rebuilds a configuration from fan-triangulation chart values; supported
/// for m = 2 and m = 3 (Unsupported beyond). The result's a_chart on the fan
/// reproduces the inputs exactly.
FlagConfig reconstruct_from_coords(int m, int n, const PositiveAChart& values);

enum class GenRecipe { Vandermonde, Reconstruct };

/// Deterministic generator of positive configurations. Recipe (a) uses
/// osculating Vandermonde flags at ascending rational points followed by an
/// optional torus twist; recipe (b) reconstructs from random positive
/// monomial chart values. Seed 0 with m=2, n=4 yields the x = (0,1,3,7)
/// configuration.
FlagConfig generate_positive(int m, int n, std::uint64_t seed,
                             const std::vector<Coweight>* valuation_targets = nullptr,
                             GenRecipe recipe = GenRecipe::Vandermonde);

}  // namespace lamina
