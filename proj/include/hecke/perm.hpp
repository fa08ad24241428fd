#pragma once

// Permutations of {0, ..., n-1}. Text form is 1-based cycle notation.
// Composition is right-to-left: (a * b)(x) = a(b(x)).

#include <string>
#include <string_view>
#include <vector>

#include "hecke/exact_algebra.hpp"

namespace hecke {

class Permutation {
 public:
  Permutation() = default;
  /// images[x] is the image of x; throws DomainError if not a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// 1-based cycles on n points.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  /// "(1,2)(3)" on max(degree, largest point) points.
  static Permutation parse(std::string_view text, int degree = 0);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  Permutation pow(long long k) const;

  bool is_identity() const;
  /// 0-based cycles including fixed points, each starting at its least point,
  /// ordered by that point.
  std::vector<std::vector<int>> cycles() const;
  std::vector<int> cycle_lengths() const;
  int fixed_points() const;
  BigInt order() const;
  bool is_even() const;

  /// 1-based, fixed points included: "(1,2)(3)". Degree 0 prints "()".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace hecke
