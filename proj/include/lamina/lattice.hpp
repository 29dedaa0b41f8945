#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamina/charts.hpp"
#include "lamina/flag.hpp"
#include "lamina/smatrix.hpp"
#include "lamina/triangulation.hpp"
#include "lamina/tropical.hpp"

namespace lamina {

/// A full-rank O-submodule of K^m, presented by a generator matrix.
/// SL lattices have determinant exactly 1; PGL lattices are considered up
/// to global scaling by powers of t.
struct Lattice {
  SeriesMatrix generators;
  GroupKind kind = GroupKind::SL;
};

Lattice lattice_from_flag(const AffineFlag& flag, GroupKind kind = GroupKind::SL);

/// Smith normal form over O = Q[[t]]: left * diag(t^e1,...,t^em) * right
/// agrees with M up to truncation, with left and right invertible over O and
/// e1 <= ... <= em.
struct SmithDecomposition {
  std::vector<long long> exponents;
  SeriesMatrix left;
  SeriesMatrix right;
};

SmithDecomposition smith_dvr(const SeriesMatrix& m);

/// Coweight-valued distance d(L1, L2), dominant by construction.
DominantCoweight distance(const Lattice& l1, const Lattice& l2);

/// Module equality: Smith exponents of G1^-1 G2 all zero (SL) or all equal
/// (PGL, same lattice up to a global t-power).
bool lattice_equal(const Lattice& l1, const Lattice& l2);

/// f^t_{ijk}: max of -val over determinants of i, j, k generator columns.
/// Throws MinusInfinity when every minor vanishes exactly.
long long f_trop_lattice(const Lattice& l1, const Lattice& l2, const Lattice& l3, int i, int j,
                         int k);

/// Edge specialization f^t_{ij0}.
long long f_trop_edge(const Lattice& l1, const Lattice& l2, int i, int j);

struct GoodLiftCertificateEntry {
  std::array<int, 3> triangle;
  std::array<int, 3> ijk;
  long long classical;  // -val f_ijk of the scaled flags
  long long lattice;    // f^t_ijk of the spanned lattices
};

struct GoodLiftResult {
  std::vector<Coweight> lambdas;
  std::vector<Lattice> lattices;
  std::vector<GoodLiftCertificateEntry> certificate;
  long long gap = 0;
  FlagConfig scaled;  // the good lifts themselves, F_i * lambda_i
};

/// The uniform dominant shape (m-1, m-3, ..., -(m-1)) used by the search.
Coweight good_lift_shape(int m);

/// Checks -val f_ijk(scaled flags) == f^t_ijk(lattices) on every triangle
/// and index of the triangulation. Fills the certificate on success.
bool goodness_audit(const FlagConfig& scaled, const std::vector<Lattice>& lattices,
                    const Triangulation& tri,
                    std::vector<GoodLiftCertificateEntry>* certificate = nullptr);

/// Searches gaps 0, 1, 2, 4, ..., 2^20 for a uniform coweight making the
/// scaled columns a good lift. Throws SearchExhausted past 2^20.
GoodLiftResult good_lift(const FlagConfig& config, const Triangulation& tri);

/// A lattice together with a coweight shift: one point of a virtual
/// positive configuration.
struct VirtualPoint {
  Lattice lattice;
  Coweight shift;
};

struct VirtualConfig {
  std::vector<VirtualPoint> points;
  /// The good lifts this configuration was built from, when known.
  std::optional<FlagConfig> provenance;

  int size() const { return static_cast<int>(points.size()); }
  int rank() const { return points.empty() ? 0 : points.front().lattice.generators.rows(); }
};

VirtualConfig virtual_config_from_good_lift(const GoodLiftResult& lift);

/// The configuration the provenance realizes: scaled flags acted on by the
/// shifts (for a good-lift result, the original configuration).
FlagConfig base_flags(const VirtualConfig& vc);

/// Extended coordinate f^t((x_a, s_a), (x_b, s_b), (x_c, s_c)).
long long extended_coord(const VirtualPoint& a, const VirtualPoint& b, const VirtualPoint& c,
                         int i, int j, int k);

TropicalAChart tropical_a_chart(const VirtualConfig& vc, const Triangulation& tri);

/// True when every tropical chart value equals -val of the classical chart
/// of the provenance acted on by the shifts.
bool provenance_consistent(const VirtualConfig& vc, const Triangulation& tri);

struct EquivalenceResult {
  bool equal = false;
  std::string witness;  // first differing chart key, empty when equal
};

/// Coordinate criterion: equal tropical charts on the triangulation.
EquivalenceResult equivalent(const VirtualConfig& a, const VirtualConfig& b,
                             const Triangulation& tri);

/// Restriction to a subset of vertices (ascending positions, 1-based).
VirtualConfig restrict_config(const VirtualConfig& vc, const std::vector<int>& vertices);

/// Glues two virtual configurations along boundary edges. edge1 = (p1, p2)
/// and edge2 = (q1, q2) are consecutive vertex pairs in their polygons'
/// cyclic order; p1 is identified with q2 and p2 with q1. The result lives
/// on the (n1 + n2 - 2)-gon labeled starting at the glued vertex p1.
VirtualConfig glue_a(const VirtualConfig& vc1, std::pair<int, int> edge1, const VirtualConfig& vc2,
                     std::pair<int, int> edge2);

/// Positions of the two sides' vertices inside the glued labeling, in the
/// order (p1, p2, p3, ..., pn) and (q1, q2, q3, ..., ql).
std::pair<std::vector<int>, std::vector<int>> glued_vertex_positions(int n1, std::pair<int, int> edge1,
                                                                     int n2,
                                                                     std::pair<int, int> edge2);

}  // namespace lamina
