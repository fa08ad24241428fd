#pragma once

// Permutation groups via a deterministic Schreier-Sims stabilizer chain.

#include <cstdint>
#include <optional>
#include <vector>

#include "hecke/perm.hpp"

namespace hecke {

class PermGroup {
 public:
  /// Group generated by gens on degree points. base_prefix fixes the first
  /// base points (useful for point stabilizers and transversals).
  PermGroup(int degree, std::vector<Permutation> gens, std::vector<int> base_prefix = {});

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  std::vector<int> base() const;
  /// Strong generators of the stabilizer of the first k base points.
  std::vector<Permutation> strong_generators(std::size_t k = 0) const;

  BigInt order() const;
  bool contains(const Permutation& g) const;
  /// Sorted orbit of point under the generators.
  std::vector<int> orbit(int point) const;
  bool is_transitive() const;
  /// Generators of the stabilizer of point.
  std::vector<Permutation> stabilizer_generators(int point) const;

  /// Every element, if there are at most limit of them.
  std::optional<std::vector<Permutation>> elements(std::uint64_t limit) const;

  /// For the first base point b: the element u_x with u_x(b) = x, if x is in the orbit of b.
  std::optional<Permutation> transversal(int x) const;

 private:
  struct Level {
    int base = 0;
    std::vector<Permutation> gens;  // strong generators fixing earlier base points
    std::vector<int> orbit;
    std::vector<std::optional<Permutation>> u;  // u[x](base) == x
    std::vector<std::vector<char>> tested;      // tested[orbit index][gen index]
  };

  void extend_orbit(Level& lv) const;
  /// Sifts g from level `from`; returns the residue and the level where it stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  void build();

  int degree_;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
};

/// Centralizer of a transitive group G in the full symmetric group on its points.
/// Throws DomainError if G is not transitive.
PermGroup centralizer_in_symmetric(const PermGroup& g);

struct StructureSummary {
  BigInt order;
  // unset when the group is larger than the bound
  std::optional<BigInt> exponent;
  std::optional<bool> abelian;
  std::optional<bool> cyclic;
};

StructureSummary structure_summary(const PermGroup& g, std::uint64_t bound = 1000000);

}  // namespace hecke
