#pragma once
// Random valid Hecke-Farey symbols built by gluing pieces onto a seed line.

#include <random>

#include "hecke/hfs.hpp"

namespace hecke::testing {

struct RandomSymbol {
  HeckeFareySymbol symbol;
  int qgons = 0;
  int bullets = 0;
  /// q/r for every glued rotation piece
  std::vector<int> er_sizes;
  /// Darts counted from the gluing history, independent of any decomposition.
  int expected_index = 0;
};

/// Starts from the even line (0, inf), glues up to max_pieces q-gons or
/// rotation pieces across random even sides, then labels the remaining even
/// sides with circles, bullets and free pairs.
RandomSymbol random_hfs(int q, std::mt19937& rng, int max_pieces = 4);

}  // namespace hecke::testing
