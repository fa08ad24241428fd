#pragma once

// Finite quotients Z[lambda_q] / (g) for a single ideal generator g.

#include <cstdint>
#include <vector>

#include "hecke/exact_algebra.hpp"

namespace hecke {

/// Residue vector, canonically reduced: 0 <= residue[i] < pivot[i].
struct QuotientElement {
  std::vector<std::int64_t> residue;

  friend bool operator==(const QuotientElement&, const QuotientElement&) = default;
};

class QuotientRing {
 public:
  /// Throws DomainError for a zero generator, ResourceLimit if the ring has
  /// more than max_size residue classes.
  QuotientRing(const RingElement& generator, std::uint64_t max_size = std::uint64_t(1) << 24);

  int q() const { return q_; }
  int degree() const { return static_cast<int>(pivots_.size()); }
  const RingElement& generator() const { return generator_; }
  /// Upper-triangular row basis of the ideal lattice (Hermite normal form).
  const std::vector<std::vector<BigInt>>& basis() const { return basis_; }
  std::uint64_t size() const { return size_; }

  QuotientElement reduce(const RingElement& a) const;
  QuotientElement zero() const;
  QuotientElement one() const;
  QuotientElement add(const QuotientElement& a, const QuotientElement& b) const;
  QuotientElement sub(const QuotientElement& a, const QuotientElement& b) const;
  QuotientElement neg(const QuotientElement& a) const;
  QuotientElement mul(const QuotientElement& a, const QuotientElement& b) const;

  /// Mixed-radix index in [0, size).
  std::uint64_t index_of(const QuotientElement& a) const;
  QuotientElement from_index(std::uint64_t idx) const;
  std::vector<QuotientElement> elements() const;

 private:
  QuotientElement reduce_wide(std::vector<__int128> v) const;

  int q_;
  RingElement generator_;
  std::vector<std::vector<BigInt>> basis_;
  std::vector<std::vector<__int128>> basis_small_;
  std::vector<std::int64_t> pivots_;
  std::vector<std::int64_t> minpoly_;
  std::uint64_t size_ = 1;
};

}  // namespace hecke
