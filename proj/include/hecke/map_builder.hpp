#pragma once

// Special polygon -> faces, darts and the permutations r1, r2, r0 of the
// associated combinatorial map, plus its invariants.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hecke/hfs.hpp"
#include "hecke/perm.hpp"

namespace hecke {

enum class FaceKind { QGon, Bullet, Er };

struct Face {
  FaceKind kind = FaceKind::QGon;
  int r = 0;  // for Er faces
  /// Cusps around the face, interior on the left. Empty for maps built from
  /// bare permutations. A bullet face lists the two ends of its side.
  std::vector<Cusp> vertices;
  /// 0-based darts in cycle order.
  std::vector<int> darts;
};

struct Edge {
  bool free = false;
  std::vector<int> darts;  // 1 dart if free, else 2
};

struct Dart {
  int face = 0;
  /// Directed side of the face; unset for maps built from bare permutations.
  std::optional<Cusp> from, to;
};

/// Darts are 0-based internally and 1-based in text output.
struct CombinatorialMap {
  int q = 3;
  int omega = 0;
  Permutation r1, r2, r0;
  std::vector<Face> faces;
  std::vector<Edge> edges;
  std::vector<Dart> darts;
};

struct DecomposeOptions {
  /// 0 means the default of 10 * (cusp count) * q.
  std::uint64_t face_budget = 0;
};

/// Faces in discovery order with their darts numbered consecutively.
/// Throws InvalidSymbol (codes DecompositionFailed, FaceBudgetExceeded,
/// InvalidErAdjacency) when the symbol does not describe a special polygon.
std::vector<Face> decompose(const HeckeFareySymbol& hfs, const DecomposeOptions& opts = {});

CombinatorialMap build_map(const HeckeFareySymbol& hfs, const DecomposeOptions& opts = {});

/// Map from bare permutations; faces are r2 cycles and edges r1 cycles.
CombinatorialMap make_map(int q, const Permutation& r1, const Permutation& r2);

struct InvariantReport {
  int index = 0;
  int tau2 = 0;
  /// r -> v_r for every divisor r of q with 1 < r <= q.
  std::map<int, int> v;
  int v_inf = 0;
  int edges = 0;
  int faces = 0;
  /// r0 cycle lengths, in the order of the cycles' least darts.
  std::vector<int> vertex_degrees;
  std::int64_t level = 1;
  int genus = 0;
  bool quasi_regular = false;
};

/// Throws InvalidSymbol (code InvalidInvariants) if the genus is not a
/// non-negative integer or the Euler characteristic does not match it.
InvariantReport invariants(const CombinatorialMap& map);

/// Cusp classes of the special polygon under its side pairings, as lists of
/// indices into hfs.cusps (the first and last cusp are the same vertex).
std::vector<std::vector<int>> vertex_classes_by_pairings(const HeckeFareySymbol& hfs);

/// Breadth-first relabeling from base_dart, applying r1 then r2 at each dart.
CombinatorialMap canonical_relabel(const CombinatorialMap& map, int base_dart = 0);
bool maps_isomorphic(const CombinatorialMap& a, const CombinatorialMap& b);

/// (sigma0, sigma1) = (r1, r2)
std::pair<Permutation, Permutation> dessin(const CombinatorialMap& map);

}  // namespace hecke
