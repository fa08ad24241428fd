#include "hecke/map_builder.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

using Kind = PairingLabel::Kind;

// What lies across a region side: a side of the symbol, or one half of a
// chord created while splitting a region.
struct Outer {
  enum class Type { Symbol, Chord } type = Type::Symbol;
  int id = 0;
  int half = 0;
};

struct RegionSide {
  Cusp from, to;
  Outer outer;
};

using Region = std::vector<RegionSide>;

struct DartInfo {
  int face = 0;
  Cusp from, to;
  Outer outer;
  int bullet_side = -1;  // for bullet-face darts: the symbol side they hang off
};

[[noreturn]] void fail(const std::string& msg) { throw InvalidSymbol("DecompositionFailed", msg); }

class Builder {
 public:
  Builder(const HeckeFareySymbol& hfs, const DecomposeOptions& opts) : hfs_(hfs), q_(hfs.q) {
    budget_ = opts.face_budget ? opts.face_budget
                               : 10 * static_cast<std::uint64_t>(hfs.cusps.size()) *
                                     static_cast<std::uint64_t>(hfs.q);
  }

  CombinatorialMap run() {
    check_shape();
    const std::size_t n = hfs_.labels.size();
    inner_dart_.assign(n, -1);
    bullet_dart_.assign(n, -1);

    Region top;
    for (std::size_t i = 0; i < n; ++i)
      top.push_back({hfs_.cusps[i], hfs_.cusps[i + 1], {Outer::Type::Symbol, static_cast<int>(i), 0}});

    if (n == 2) {
      two_sided(top);
    } else {
      std::deque<Region> queue{std::move(top)};
      while (!queue.empty()) {
        Region r = std::move(queue.front());
        queue.pop_front();
        process(r, queue);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (hfs_.labels[i].kind != Kind::Bullet) continue;
      if (bullet_dart_[i] >= 0) continue;  // two-sided case
      Face f{FaceKind::Bullet, 0, {hfs_.cusps[i], hfs_.cusps[i + 1]}, {}};
      const int d = new_dart(static_cast<int>(faces_.size()), hfs_.cusps[i], hfs_.cusps[i + 1],
                             {Outer::Type::Symbol, static_cast<int>(i), 0});
      darts_[static_cast<std::size_t>(d)].bullet_side = static_cast<int>(i);
      bullet_dart_[i] = d;
      f.darts.push_back(d);
      faces_.push_back(std::move(f));
    }
    return assemble();
  }

 private:
  void check_shape() const {
    if (hfs_.cusps.size() < 3 || hfs_.labels.size() + 1 != hfs_.cusps.size())
      fail("label count does not match cusp count");
    for (const auto& c : hfs_.cusps)
      if (c.q() != q_) fail("cusp over the wrong ring");
  }

  int new_dart(int face, const Cusp& from, const Cusp& to, Outer outer) {
    darts_.push_back({face, from, to, outer, -1});
    return static_cast<int>(darts_.size()) - 1;
  }

  const PairingLabel* symbol_label(const Outer& o) const {
    if (o.type != Outer::Type::Symbol) return nullptr;
    return &hfs_.labels[static_cast<std::size_t>(o.id)];
  }

  // The symbol -inf, 0, inf: both sides lie on the same even line.
  void two_sided(const Region& top) {
    const auto k0 = hfs_.labels[0].kind, k1 = hfs_.labels[1].kind;
    if (k0 == Kind::Bullet && k1 == Kind::Bullet) {
      for (int i = 0; i < 2; ++i) {
        Face f{FaceKind::Bullet, 0, {top[static_cast<std::size_t>(i)].from, top[static_cast<std::size_t>(i)].to}, {}};
        const int d = new_dart(static_cast<int>(faces_.size()), f.vertices[0], f.vertices[1],
                               {Outer::Type::Symbol, i, 0});
        darts_[static_cast<std::size_t>(d)].bullet_side = i;
        bullet_dart_[static_cast<std::size_t>(i)] = d;
        f.darts.push_back(d);
        faces_.push_back(std::move(f));
      }
      // each bullet dart's inner side is the other bullet face
      inner_dart_[0] = bullet_dart_[1];
      inner_dart_[1] = bullet_dart_[0];
      return;
    }
    if ((k0 == Kind::Circle && k1 == Kind::Bullet) || (k0 == Kind::Bullet && k1 == Kind::Circle)) {
      const int i = k0 == Kind::Bullet ? 0 : 1;
      const auto& side = top[static_cast<std::size_t>(i)];
      Face f{FaceKind::Bullet, 0, {side.from, side.to}, {}};
      const int d = new_dart(0, side.from, side.to, {Outer::Type::Symbol, 1 - i, 0});
      bullet_dart_[static_cast<std::size_t>(i)] = d;
      f.darts.push_back(d);
      faces_.push_back(std::move(f));
      return;
    }
    fail("a symbol with a single finite cusp needs labels b,b or o,b");
  }

  void count_face() {
    if (++face_count_ > budget_)
      throw InvalidSymbol("FaceBudgetExceeded",
                          "more than " + std::to_string(budget_) + " faces in the decomposition");
  }

  // Position of x among the region vertices strictly after `after` and
  // strictly before `limit` (cyclically, counted as offsets from `after`).
  static std::optional<std::size_t> find_forward(const Region& r, const Cusp& x, std::size_t after,
                                                 std::size_t steps_left) {
    for (std::size_t k = 1; k <= steps_left; ++k) {
      const std::size_t p = (after + k) % r.size();
      if (same_cusp(r[p].from, x)) return p;
    }
    return std::nullopt;
  }

  void process(const Region& r, std::deque<Region>& queue) {
    const std::size_t nr = r.size();
    if (nr < 3) fail("region with fewer than three sides");
    count_face();

    std::size_t k0 = 0;
    int er = 0;
    for (std::size_t k = 0; k < nr; ++k) {
      const PairingLabel* l = symbol_label(r[k].outer);
      if (l && l->kind == Kind::Er) {
        k0 = k;
        er = l->value;
        break;
      }
    }

    std::vector<Cusp> fv;  // face vertices; fv[0] -> fv[1] is the seed side
    if (er) {
      const QGon p = reconstruct_er_polygon(r[k0].from, r[k0].to, er, q_);
      const int s = q_ - q_ / er;
      fv.push_back(p.cusps[0]);
      for (int i = s; i < q_; ++i) fv.push_back(p.cusps[static_cast<std::size_t>(i)]);
    } else {
      const Cusp& a = r[k0].from;
      Cusp b = r[k0].to;
      const RingElement u = cross(a, b);
      if (!u.is_one()) {
        auto inv = unit_inverse(u);
        if (!inv)
          fail("side (" + a.to_string() + ", " + b.to_string() + ") is not an even line");
        b = Cusp{b.num * *inv, b.den * *inv};
      }
      QGon p = qgon_complete(a, b, q_);
      fv.assign(p.cusps.begin(), p.cusps.end() - 1);
    }

    const std::size_t m = fv.size();
    std::vector<std::size_t> pos{k0, (k0 + 1) % nr};
    if (!same_cusp(r[pos[1]].from, fv[1])) throw InternalError("seed side does not start the face");
    std::size_t used = 1;  // steps taken from k0
    for (std::size_t j = 2; j < m; ++j) {
      auto p = find_forward(r, fv[j], pos.back(), nr - used - 1);
      if (!p)
        fail("face vertex " + fv[j].to_string() + " is not on the region boundary");
      used += (*p + nr - pos.back()) % nr;
      pos.push_back(*p);
    }

    const int face_id = static_cast<int>(faces_.size());
    Face face{er ? FaceKind::Er : FaceKind::QGon, er, {}, {}};
    for (std::size_t j = 0; j < m; ++j) face.vertices.push_back(r[pos[j]].from);
    faces_.push_back(face);

    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t a = pos[j], b = pos[(j + 1) % m];
      const std::size_t gap = (b + nr - a) % nr == 0 ? nr : (b + nr - a) % nr;
      const Cusp& from = r[a].from;
      const Cusp& to = r[b].from;
      if (gap == 1) {
        const PairingLabel* l = symbol_label(r[a].outer);
        if (l && l->kind == Kind::Er) {
          if (er && j == 0) continue;  // consumed as the seed of this e_r face
          fail("e_r side (" + from.to_string() + ", " + to.to_string() + ") meets a face side");
        }
        const int d = new_dart(face_id, from, to, r[a].outer);
        faces_.back().darts.push_back(d);
        if (r[a].outer.type == Outer::Type::Symbol) {
          inner_dart_[static_cast<std::size_t>(r[a].outer.id)] = d;
        } else {
          chord_darts_[static_cast<std::size_t>(r[a].outer.id)][static_cast<std::size_t>(r[a].outer.half)] = d;
        }
        continue;
      }
      if (er && j == 0) throw InternalError("e_r seed side is not a region side");
      const int chord = static_cast<int>(chord_darts_.size());
      chord_darts_.push_back({-1, -1});
      const int d = new_dart(face_id, from, to, {Outer::Type::Chord, chord, 0});
      faces_.back().darts.push_back(d);
      chord_darts_.back()[0] = d;
      Region sub;
      for (std::size_t k = 0; k < gap; ++k) sub.push_back(r[(a + k) % nr]);
      sub.push_back({to, from, {Outer::Type::Chord, chord, 1}});
      queue.push_back(std::move(sub));
    }
  }

  CombinatorialMap assemble() {
    const int n = static_cast<int>(darts_.size());
    const std::size_t nsides = hfs_.labels.size();
    std::vector<int> partner(nsides, -1);
    {
      std::map<int, int> first;
      for (std::size_t i = 0; i < nsides; ++i) {
        if (hfs_.labels[i].kind != Kind::Free) continue;
        auto it = first.find(hfs_.labels[i].value);
        if (it == first.end()) {
          first[hfs_.labels[i].value] = static_cast<int>(i);
        } else {
          partner[i] = it->second;
          partner[static_cast<std::size_t>(it->second)] = static_cast<int>(i);
        }
      }
    }
    for (std::size_t i = 0; i < nsides && nsides > 2; ++i) {
      if (hfs_.labels[i].kind == Kind::Er) continue;
      if (inner_dart_[i] < 0)
        fail("side " + std::to_string(i) + " was not reached by the decomposition");
    }

    std::vector<int> r1(static_cast<std::size_t>(n), -1);
    for (int d = 0; d < n; ++d) {
      const DartInfo& di = darts_[static_cast<std::size_t>(d)];
      int img = -1;
      if (di.bullet_side >= 0) {
        img = inner_dart_[static_cast<std::size_t>(di.bullet_side)];
      } else if (di.outer.type == Outer::Type::Chord) {
        img = chord_darts_[static_cast<std::size_t>(di.outer.id)][static_cast<std::size_t>(1 - di.outer.half)];
      } else {
        const auto i = static_cast<std::size_t>(di.outer.id);
        switch (hfs_.labels[i].kind) {
          case Kind::Circle:
            img = d;
            break;
          case Kind::Bullet:
            img = bullet_dart_[i];
            break;
          case Kind::Free:
            if (partner[i] < 0) fail("unpaired free label " + hfs_.labels[i].to_string());
            img = inner_dart_[static_cast<std::size_t>(partner[i])];
            break;
          case Kind::Er:
            throw InternalError("e_r side became a dart");
        }
      }
      if (img < 0) throw InternalError("dart without a partner");
      r1[static_cast<std::size_t>(d)] = img;
    }
    std::vector<int> r2(static_cast<std::size_t>(n), -1);
    for (const auto& f : faces_)
      for (std::size_t j = 0; j < f.darts.size(); ++j)
        r2[static_cast<std::size_t>(f.darts[j])] = f.darts[(j + 1) % f.darts.size()];

    CombinatorialMap map;
    map.q = q_;
    map.omega = n;
    try {
      map.r1 = Permutation(r1);
      map.r2 = Permutation(r2);
    } catch (const DomainError&) {
      throw InternalError("dart pairing is not a permutation");
    }
    if (!(map.r1 * map.r1).is_identity()) throw InternalError("r1 is not an involution");
    map.r0 = map.r2.inverse() * map.r1.inverse();
    map.faces = faces_;
    for (const auto& c : map.r1.cycles()) map.edges.push_back({c.size() == 1, c});
    for (const auto& d : darts_) map.darts.push_back({d.face, d.from, d.to});
    return map;
  }

  const HeckeFareySymbol& hfs_;
  int q_;
  std::uint64_t budget_;
  std::uint64_t face_count_ = 0;
  std::vector<Face> faces_;
  std::vector<DartInfo> darts_;
  std::vector<int> inner_dart_;   // per symbol side: the face dart just inside it
  std::vector<int> bullet_dart_;  // per symbol side: its 1-gon dart
  std::vector<std::array<int, 2>> chord_darts_;
};

bool transitive(const CombinatorialMap& m) {
  if (m.omega == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(m.omega), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : {m.r1(x), m.r2(x)})
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++count;
        stack.push_back(y);
      }
  }
  return count == m.omega;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a / g, b, &out)) throw ResourceLimit("level does not fit in 64 bits");
  return out;
}

}  // namespace

CombinatorialMap build_map(const HeckeFareySymbol& hfs, const DecomposeOptions& opts) {
  CombinatorialMap m = Builder(hfs, opts).run();
  if (!transitive(m)) throw InternalError("map is not connected");
  return m;
}

std::vector<Face> decompose(const HeckeFareySymbol& hfs, const DecomposeOptions& opts) {
  return build_map(hfs, opts).faces;
}

CombinatorialMap make_map(int q, const Permutation& r1, const Permutation& r2) {
  if (r1.degree() != r2.degree()) throw DomainError("make_map: r1 and r2 have different degrees");
  CombinatorialMap m;
  m.q = q;
  m.omega = r1.degree();
  m.r1 = r1;
  m.r2 = r2;
  m.r0 = r2.inverse() * r1.inverse();
  m.darts.resize(static_cast<std::size_t>(m.omega));
  for (const auto& c : r2.cycles()) {
    Face f;
    f.kind = c.size() == static_cast<std::size_t>(q) ? FaceKind::QGon
             : c.size() == 1                         ? FaceKind::Bullet
                                                     : FaceKind::Er;
    if (f.kind == FaceKind::Er) f.r = q / static_cast<int>(c.size());
    f.darts = c;
    for (int d : c) m.darts[static_cast<std::size_t>(d)].face = static_cast<int>(m.faces.size());
    m.faces.push_back(std::move(f));
  }
  for (const auto& c : r1.cycles()) m.edges.push_back({c.size() == 1, c});
  return m;
}

InvariantReport invariants(const CombinatorialMap& map) {
  auto bad = [](const std::string& msg) { return InvalidSymbol("InvalidInvariants", msg); };
  const int q = map.q;
  InvariantReport rep;
  rep.index = map.omega;
  rep.tau2 = map.r1.fixed_points();
  rep.edges = static_cast<int>(map.r1.cycles().size());
  const auto face_sizes = map.r2.cycle_lengths();
  rep.faces = static_cast<int>(face_sizes.size());
  for (int r = 2; r <= q; ++r)
    if (q % r == 0) rep.v[r] = 0;
  for (int len : face_sizes) {
    if (q % len != 0) throw bad("face of size " + std::to_string(len) + " does not divide q");
    if (len < q) ++rep.v[q / len];
  }
  rep.vertex_degrees = map.r0.cycle_lengths();
  rep.v_inf = static_cast<int>(rep.vertex_degrees.size());
  for (int d : rep.vertex_degrees) rep.level = checked_lcm(rep.level, d);

  // 2g - 2 + tau2/2 + sum v_r (1 - 1/r) + v_inf = d (1/2 - 1/q), times 2q
  long long num = static_cast<long long>(rep.index) * (q - 2) + 4LL * q -
                  static_cast<long long>(q) * rep.tau2 - 2LL * q * rep.v_inf;
  for (const auto& [r, v] : rep.v) num -= static_cast<long long>(v) * (2LL * q - 2LL * q / r);
  if (num < 0 || num % (4LL * q) != 0)
    throw bad("genus formula gives " + std::to_string(num) + "/" + std::to_string(4 * q));
  rep.genus = static_cast<int>(num / (4LL * q));
  // free edges end at an elliptic point of order 2, which counts as a vertex
  if (rep.v_inf + rep.tau2 - rep.edges + rep.faces != 2 - 2 * rep.genus)
    throw bad("Euler characteristic does not match genus " + std::to_string(rep.genus));

  auto all_equal = [](const std::vector<int>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
  };
  rep.quasi_regular = all_equal(rep.vertex_degrees) && all_equal(face_sizes) &&
                      (rep.tau2 == 0 || rep.tau2 == rep.edges);
  return rep;
}

std::vector<std::vector<int>> vertex_classes_by_pairings(const HeckeFareySymbol& hfs) {
  const int last = static_cast<int>(hfs.cusps.size()) - 1;
  auto vertex = [&](int i) { return i == last ? 0 : i; };
  std::vector<int> parent(hfs.cusps.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(vertex(a));
    b = find(vertex(b));
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };
  for (const auto& g : side_pairing_generators(hfs)) {
    std::vector<int> ends{static_cast<int>(g.side), static_cast<int>(g.side) + 1,
                          static_cast<int>(g.partner), static_cast<int>(g.partner) + 1};
    for (const PSL2Element& h : {g.matrix, g.matrix.inverse()})
      for (int x : ends) {
        const Cusp y = h.apply(hfs.cusps[static_cast<std::size_t>(x)]);
        for (int z : ends)
          if (same_cusp(y, hfs.cusps[static_cast<std::size_t>(z)])) unite(x, z);
      }
  }
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i <= last; ++i) classes[find(vertex(i))].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

CombinatorialMap canonical_relabel(const CombinatorialMap& map, int base_dart) {
  const int n = map.omega;
  if (n == 0) return make_map(map.q, map.r1, map.r2);
  if (base_dart < 0 || base_dart >= n) throw DomainError("canonical_relabel: base dart out of range");
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> order{base_dart};
  label[static_cast<std::size_t>(base_dart)] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int y : {map.r1(order[i]), map.r2(order[i])})
      if (label[static_cast<std::size_t>(y)] < 0) {
        label[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
        order.push_back(y);
      }
  if (static_cast<int>(order.size()) != n) throw DomainError("canonical_relabel: map is not connected");
  std::vector<int> i1(static_cast<std::size_t>(n)), i2(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    i1[static_cast<std::size_t>(label[static_cast<std::size_t>(x)])] = label[static_cast<std::size_t>(map.r1(x))];
    i2[static_cast<std::size_t>(label[static_cast<std::size_t>(x)])] = label[static_cast<std::size_t>(map.r2(x))];
  }
  return make_map(map.q, Permutation(std::move(i1)), Permutation(std::move(i2)));
}

bool maps_isomorphic(const CombinatorialMap& a, const CombinatorialMap& b) {
  if (a.omega != b.omega) return false;
  if (a.omega == 0) return true;
  const CombinatorialMap ca = canonical_relabel(a, 0);
  for (int d = 0; d < b.omega; ++d) {
    const CombinatorialMap cb = canonical_relabel(b, d);
    if (cb.r1 == ca.r1 && cb.r2 == ca.r2) return true;
  }
  return false;
}

std::pair<Permutation, Permutation> dessin(const CombinatorialMap& map) { return {map.r1, map.r2}; }

}  // namespace hecke
