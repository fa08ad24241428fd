#include "hecke/perm_group.hpp"

#include <algorithm>

#include "hecke/errors.hpp"

namespace hecke {

PermGroup::PermGroup(int degree, std::vector<Permutation> gens, std::vector<int> base_prefix)
    : degree_(degree), gens_(std::move(gens)) {
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw DomainError("generator degree does not match group degree");
  for (int b : base_prefix) {
    if (b < 0 || b >= degree_) throw DomainError("base point out of range");
    Level lv;
    lv.base = b;
    levels_.push_back(std::move(lv));
  }
  build();
}

void PermGroup::extend_orbit(Level& lv) const {
  if (lv.u.empty()) {
    lv.u.assign(static_cast<std::size_t>(degree_), std::nullopt);
    lv.u[static_cast<std::size_t>(lv.base)] = Permutation::identity(degree_);
    lv.orbit = {lv.base};
  }
  // Re-scan everything: new generators can reach new points from old ones.
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    const int y = lv.orbit[i];
    for (const auto& s : lv.gens) {
      const int z = s(y);
      auto& slot = lv.u[static_cast<std::size_t>(z)];
      if (slot) continue;
      slot = s * *lv.u[static_cast<std::size_t>(y)];
      lv.orbit.push_back(z);
    }
  }
  lv.tested.resize(lv.orbit.size());
  for (auto& row : lv.tested) row.resize(lv.gens.size(), 0);
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const int x = g(lv.base);
    const auto& ux = lv.u[static_cast<std::size_t>(x)];
    if (!ux) return {std::move(g), l};
    g = ux->inverse() * g;
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::build() {
  std::vector<Permutation> nontrivial;
  for (const auto& g : gens_)
    if (!g.is_identity()) nontrivial.push_back(g);
  if (levels_.empty() && !nontrivial.empty()) {
    const auto& g = nontrivial.front();
    int b = 0;
    while (g(b) == b) ++b;
    levels_.push_back(Level{b, {}, {}, {}, {}});
  }
  if (levels_.empty()) return;
  levels_[0].gens = nontrivial;
  for (auto& lv : levels_) extend_orbit(lv);

  std::size_t i = levels_.size() - 1;
  for (;;) {
    bool added = false;
    // levels_ may grow inside the loop, so no references are held across it
    for (std::size_t oi = 0; !added && oi < levels_[i].orbit.size(); ++oi) {
      for (std::size_t gi = 0; gi < levels_[i].gens.size(); ++gi) {
        if (levels_[i].tested[oi][gi]) continue;
        levels_[i].tested[oi][gi] = 1;
        const Level& cur = levels_[i];
        const int x = cur.orbit[oi];
        const Permutation& s = cur.gens[gi];
        Permutation h = cur.u[static_cast<std::size_t>(s(x))]->inverse() * s *
                        *cur.u[static_cast<std::size_t>(x)];
        auto [res, j] = strip(std::move(h), i + 1);
        if (res.is_identity()) continue;
        if (j == levels_.size()) {
          int b = 0;
          while (res(b) == b) ++b;
          levels_.push_back(Level{b, {}, {}, {}, {}});
        }
        for (std::size_t l = i + 1; l <= j; ++l) {
          levels_[l].gens.push_back(res);
          extend_orbit(levels_[l]);
        }
        i = j;
        added = true;
        break;
      }
    }
    if (added) continue;
    if (i == 0) break;
    --i;
  }
}

std::vector<int> PermGroup::base() const {
  std::vector<int> out;
  for (const auto& lv : levels_) out.push_back(lv.base);
  return out;
}

std::vector<Permutation> PermGroup::strong_generators(std::size_t k) const {
  if (k < levels_.size()) return levels_[k].gens;
  return {};
}

BigInt PermGroup::order() const {
  BigInt n = 1;
  for (const auto& lv : levels_) n *= lv.orbit.size();
  return n;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [res, j] = strip(g, 0);
  return j == levels_.size() && res.is_identity();
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<char> seen(static_cast<std::size_t>(degree_), 0);
  std::vector<int> out{point};
  seen[static_cast<std::size_t>(point)] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens_) {
      int y = g(out[i]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroup::is_transitive() const {
  return degree_ <= 1 || static_cast<int>(orbit(0).size()) == degree_;
}

std::vector<Permutation> PermGroup::stabilizer_generators(int point) const {
  PermGroup chain(degree_, gens_, {point});
  return chain.strong_generators(1);
}

std::optional<Permutation> PermGroup::transversal(int x) const {
  if (levels_.empty()) {
    if (x == 0) return Permutation::identity(degree_);
    return std::nullopt;
  }
  return levels_[0].u[static_cast<std::size_t>(x)];
}

std::optional<std::vector<Permutation>> PermGroup::elements(std::uint64_t limit) const {
  if (order() > BigInt(limit)) return std::nullopt;
  std::vector<Permutation> out{Permutation::identity(degree_)};
  // g = u_0 * u_1 * ... * u_k with u_l from the level-l transversal
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels_[l].orbit.size());
    for (int x : levels_[l].orbit)
      for (const auto& g : out) next.push_back(*levels_[l].u[static_cast<std::size_t>(x)] * g);
    out = std::move(next);
  }
  return out;
}

PermGroup centralizer_in_symmetric(const PermGroup& g) {
  const int n = g.degree();
  if (!g.is_transitive()) throw DomainError("centralizer_in_symmetric: group is not transitive");
  if (n == 0) return PermGroup(0, {});
  PermGroup chain(n, g.generators(), {0});
  const auto stab = chain.strong_generators(1);
  std::vector<Permutation> cent;
  for (int w = 0; w < n; ++w) {
    bool fixed = true;
    for (const auto& s : stab)
      if (s(w) != w) {
        fixed = false;
        break;
      }
    if (!fixed) continue;
    // c(u_x(0)) = u_x(w)
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) im[static_cast<std::size_t>(x)] = (*chain.transversal(x))(w);
    Permutation c(std::move(im));
    for (const auto& s : g.generators())
      if (!(c * s == s * c)) throw InternalError("centralizer element does not commute");
    if (!c.is_identity()) cent.push_back(std::move(c));
  }
  return PermGroup(n, std::move(cent));
}

StructureSummary structure_summary(const PermGroup& g, std::uint64_t bound) {
  StructureSummary out;
  out.order = g.order();
  auto elems = g.elements(bound);
  if (!elems) return out;
  BigInt exponent = 1;
  bool cyclic = false;
  for (const auto& e : *elems) {
    BigInt o = e.order();
    exponent = boost::multiprecision::lcm(exponent, o);
    if (o == out.order) cyclic = true;
  }
  bool abelian = true;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size() && abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) {
        abelian = false;
        break;
      }
  out.exponent = exponent;
  out.abelian = abelian;
  out.cyclic = cyclic;
  return out;
}

}  // namespace hecke
