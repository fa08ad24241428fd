#pragma once

// Hecke-Farey symbols: cusps, adjacency labels, side-pairing matrices,
// q-gon completion and the text/JSON formats.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/exact_algebra.hpp"

namespace hecke {

/// Projective pair num/den over Z[lambda_q]. -inf is (-1, 0) and inf is (1, 0).
struct Cusp {
  RingElement num;
  RingElement den;

  static Cusp neg_infinity(int q);
  static Cusp infinity(int q);
  static Cusp integer(int q, long long n);

  int q() const { return num.q(); }
  bool is_infinite() const { return den.is_zero(); }
  double approx() const;
  /// "a/b" with parentheses around multi-term parts; "-inf"/"inf" for the
  /// two endpoint tokens.
  std::string to_string() const;

  /// Representation equality (not projective).
  friend bool operator==(const Cusp& a, const Cusp& b) { return a.num == b.num && a.den == b.den; }
};

/// With u = a/b and w = c/d returns c*b - a*d.
RingElement cross(const Cusp& u, const Cusp& w);
/// Projective equality.
bool same_cusp(const Cusp& u, const Cusp& w);
/// Real order of two finite cusps, or of a finite cusp against +-inf tokens
/// (-1/0 sorts first, 1/0 last).
int compare_cusps(const Cusp& u, const Cusp& w);

struct PairingLabel {
  enum class Kind { Circle, Bullet, Free, Er };
  Kind kind = Kind::Circle;
  int value = 0;  // pairing number for Free, r for Er

  static PairingLabel circle() { return {Kind::Circle, 0}; }
  static PairingLabel bullet() { return {Kind::Bullet, 0}; }
  static PairingLabel free(int a) { return {Kind::Free, a}; }
  static PairingLabel er(int r) { return {Kind::Er, r}; }

  /// "o", "b", "3", "e2"
  std::string to_string() const;
  /// Inverse of to_string; throws ParseError.
  static PairingLabel parse(std::string_view text);
  friend bool operator==(const PairingLabel&, const PairingLabel&) = default;
};

/// labels[i] is attached to the adjacency (cusps[i], cusps[i+1]).
struct HeckeFareySymbol {
  int q = 3;
  std::vector<Cusp> cusps;
  std::vector<PairingLabel> labels;

  std::size_t side_count() const { return labels.size(); }
};

/// 2x2 matrix of determinant 1 taken up to sign. The first nonzero entry in
/// the order a, b, c, d is positive.
class PSL2Element {
 public:
  PSL2Element(RingElement a, RingElement b, RingElement c, RingElement d);
  static PSL2Element identity(int q);
  /// S = (0 1; -1 0)
  static PSL2Element S(int q);
  /// T = (1 L; 0 1)
  static PSL2Element T(int q);
  /// R = S T^-1 = (0 1; -1 L)
  static PSL2Element R(int q);

  int q() const { return a_.q(); }
  const RingElement& a() const { return a_; }
  const RingElement& b() const { return b_; }
  const RingElement& c() const { return c_; }
  const RingElement& d() const { return d_; }
  /// Trace of the normalized representative.
  RingElement trace() const { return a_ + d_; }
  bool is_identity() const;

  PSL2Element operator*(const PSL2Element& o) const;
  PSL2Element inverse() const;
  PSL2Element pow(long long k) const;
  /// Order if it is at most max_order, otherwise nullopt.
  std::optional<int> order(int max_order) const;
  Cusp apply(const Cusp& x) const;

  /// "(a b; c d)"
  std::string to_string() const;
  friend bool operator==(const PSL2Element&, const PSL2Element&) = default;

 private:
  PSL2Element(RingElement a, RingElement b, RingElement c, RingElement d, bool checked);

  RingElement a_, b_, c_, d_;
};

/// Cusps c_1 .. c_{q+1} of an ideal q-gon in generation order; c_{q+1} is
/// projectively c_1.
struct QGon {
  std::vector<Cusp> cusps;

  int q() const { return static_cast<int>(cusps.size()) - 1; }
  /// Index i in [0, q) whose cusp equals x projectively, if any.
  std::optional<int> position(const Cusp& x) const;
};

/// lambda * curr - prev. Requires cross(prev, curr) == 1.
Cusp qgon_next(const Cusp& prev, const Cusp& curr);
/// Completes the q-gon through the consecutive cusps c1, c2.
QGon qgon_complete(const Cusp& c1, const Cusp& c2, int q);
/// The q-gon containing x_left and x_right separated by q - q/r steps.
/// Throws InvalidSymbol with code InvalidErAdjacency when none exists.
QGon reconstruct_er_polygon(const Cusp& x_left, const Cusp& x_right, int r, int q);

/// Elliptic element of order 2 swapping the ends of the even line (u, w).
PSL2Element pairing_circle(const Cusp& u, const Cusp& w);
/// Elliptic element of order q rotating the odd line over (u, w).
PSL2Element pairing_bullet(const Cusp& u, const Cusp& w);
/// Maps the even line (u1, w1) onto (u2, w2).
PSL2Element pairing_free(const Cusp& u1, const Cusp& w1, const Cusp& u2, const Cusp& w2);
/// Order-r rotation of the q-gon P.
PSL2Element pairing_er(const QGon& p, int r);

struct Generator {
  PairingLabel label;
  /// Side indices paired by this generator (equal unless Free).
  std::size_t side = 0;
  std::size_t partner = 0;
  PSL2Element matrix;
};

/// Independent generators in side order; a Free pair appears at its first side.
std::vector<Generator> side_pairing_generators(const HeckeFareySymbol& hfs);

/// Text format, one record:
///   q=<int>
///   cusps: -inf, <num>/<den>, ..., inf
///   labels: <label>, ...
/// Blank lines and '#' comments are ignored.
HeckeFareySymbol parse_hfs(std::string_view text);
/// Several records, each starting at a "q=" line.
std::vector<HeckeFareySymbol> parse_hfs_records(std::string_view text);
std::string serialize_hfs(const HeckeFareySymbol& hfs);

}  // namespace hecke
