#include "random_hfs.hpp"

#include <algorithm>

namespace hecke::testing {

namespace {

struct Side {
  bool chord = false;
  int r = 0;
};

Cusp normalized(Cusp c) {
  if (sign_of(c.den) < 0) {
    c.num = -c.num;
    c.den = -c.den;
  }
  return c;
}

// Vertices e_0 = u, ..., e_{q-1} = w of the q-gon on the far side of the
// even line (u, w), by the three-term recurrence x' = lambda x - x''.
std::vector<Cusp> polygon_below(const Cusp& u, const Cusp& w, int q) {
  const RingElement lam = RingElement::lambda(q);
  Cusp prev{-w.num, -w.den}, curr = u;
  std::vector<Cusp> out{u};
  for (int k = 0; k < q - 2; ++k) {
    Cusp next{lam * curr.num - prev.num, lam * curr.den - prev.den};
    out.push_back(normalized(next));
    prev = curr;
    curr = next;
  }
  out.push_back(w);
  return out;
}

}  // namespace

RandomSymbol random_hfs(int q, std::mt19937& rng, int max_pieces) {
  auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  std::vector<int> divisors;
  for (int r = 2; r < q; ++r)
    if (q % r == 0) divisors.push_back(r);

  RandomSymbol out;
  std::vector<Cusp> cusps{Cusp::neg_infinity(q), Cusp::integer(q, 0), Cusp::infinity(q)};
  std::vector<Side> sides(2);

  const int pieces = pick(0, max_pieces);
  for (int p = 0; p < pieces; ++p) {
    std::vector<int> even;
    for (std::size_t i = 0; i < sides.size(); ++i)
      if (!sides[i].chord) even.push_back(static_cast<int>(i));
    if (even.empty()) break;
    const int i = even[static_cast<std::size_t>(pick(0, static_cast<int>(even.size()) - 1))];
    const auto e = polygon_below(cusps[i], cusps[i + 1], q);

    std::vector<Cusp> new_cusps;
    std::vector<Side> new_sides;
    if (divisors.empty() || coin(0.6)) {
      ++out.qgons;
      new_cusps.assign(e.begin() + 1, e.end() - 1);
      new_sides.assign(static_cast<std::size_t>(q - 1), Side{});
    } else {
      // Keep q/r consecutive sides of the polygon through (w, u); a chord
      // closes them off.
      const int r = divisors[static_cast<std::size_t>(pick(0, static_cast<int>(divisors.size()) - 1))];
      const int k = q / r;
      const int a = pick(1, k), b = k - a;
      out.er_sizes.push_back(k);
      for (int j = 1; j <= b; ++j) new_cusps.push_back(e[static_cast<std::size_t>(j)]);
      for (int j = q - a; j <= q - 2; ++j) new_cusps.push_back(e[static_cast<std::size_t>(j)]);
      new_sides.assign(static_cast<std::size_t>(b), Side{});
      new_sides.push_back(Side{true, r});
      new_sides.insert(new_sides.end(), static_cast<std::size_t>(a - 1), Side{});
    }
    cusps.insert(cusps.begin() + i + 1, new_cusps.begin(), new_cusps.end());
    sides.erase(sides.begin() + i);
    sides.insert(sides.begin() + i, new_sides.begin(), new_sides.end());
  }

  std::vector<PairingLabel> labels(sides.size());
  if (out.qgons == 0 && out.er_sizes.empty()) {
    // The bare line (0, inf): only {b, b}, {o, b} and {b, o} close up.
    switch (pick(0, 2)) {
      case 0: labels = {PairingLabel::bullet(), PairingLabel::bullet()}; break;
      case 1: labels = {PairingLabel::circle(), PairingLabel::bullet()}; break;
      default: labels = {PairingLabel::bullet(), PairingLabel::circle()}; break;
    }
  } else {
    std::vector<std::size_t> even;
    for (std::size_t i = 0; i < sides.size(); ++i) {
      if (sides[i].chord)
        labels[i] = PairingLabel::er(sides[i].r);
      else
        even.push_back(i);
    }
    std::shuffle(even.begin(), even.end(), rng);
    const int pairs = pick(0, static_cast<int>(even.size()) / 2);
    for (std::size_t j = 0; j < even.size(); ++j) {
      if (static_cast<int>(j) < 2 * pairs)
        labels[even[j]] = PairingLabel::free(static_cast<int>(j / 2) + 1);
      else
        labels[even[j]] = coin(0.4) ? PairingLabel::bullet() : PairingLabel::circle();
    }
  }
  for (const auto& l : labels)
    if (l.kind == PairingLabel::Kind::Bullet) ++out.bullets;

  out.symbol.q = q;
  out.symbol.cusps = std::move(cusps);
  out.symbol.labels = std::move(labels);
  out.expected_index = q * out.qgons + out.bullets;
  for (int k : out.er_sizes) out.expected_index += k;
  return out;
}

}  // namespace hecke::testing
