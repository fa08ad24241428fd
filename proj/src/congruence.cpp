#include <array>
#include <deque>
#include <memory>
#include <unordered_map>
#include <unordered_set>

#include "hecke/analysis.hpp"
#include "hecke/errors.hpp"
#include "hecke/quotient_ring.hpp"

namespace hecke {

namespace {

// Z[lambda]/(g) with elements as indices; small rings get full tables.
class FiniteRing {
 public:
  explicit FiniteRing(const QuotientRing& ring) : ring_(ring), n_(ring.size()) {
    if (n_ <= kTableLimit) {
      mul_.resize(n_ * n_);
      add_.resize(n_ * n_);
      std::vector<QuotientElement> el = ring.elements();
      for (std::uint64_t i = 0; i < n_; ++i)
        for (std::uint64_t j = 0; j < n_; ++j) {
          mul_[i * n_ + j] = static_cast<std::uint32_t>(ring.index_of(ring.mul(el[i], el[j])));
          add_[i * n_ + j] = static_cast<std::uint32_t>(ring.index_of(ring.add(el[i], el[j])));
        }
    }
    neg_.resize(n_ <= kTableLimit ? n_ : 0);
    for (std::uint64_t i = 0; i < neg_.size(); ++i)
      neg_[i] = ring.index_of(ring.neg(ring.from_index(i)));
  }

  std::uint64_t size() const { return n_; }
  std::uint64_t of(const RingElement& x) const { return ring_.index_of(ring_.reduce(x)); }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (!mul_.empty()) return mul_[a * n_ + b];
    return ring_.index_of(ring_.mul(ring_.from_index(a), ring_.from_index(b)));
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (!add_.empty()) return add_[a * n_ + b];
    return ring_.index_of(ring_.add(ring_.from_index(a), ring_.from_index(b)));
  }
  std::uint64_t neg(std::uint64_t a) const {
    if (!neg_.empty()) return neg_[a];
    return ring_.index_of(ring_.neg(ring_.from_index(a)));
  }

 private:
  static constexpr std::uint64_t kTableLimit = 1024;
  const QuotientRing& ring_;
  std::uint64_t n_;
  std::vector<std::uint32_t> mul_, add_;
  std::vector<std::uint64_t> neg_;
};

using Mat = std::array<std::uint64_t, 4>;

Mat mat_mul(const FiniteRing& r, const Mat& x, const Mat& y) {
  return {r.add(r.mul(x[0], y[0]), r.mul(x[1], y[2])), r.add(r.mul(x[0], y[1]), r.mul(x[1], y[3])),
          r.add(r.mul(x[2], y[0]), r.mul(x[3], y[2])), r.add(r.mul(x[2], y[1]), r.mul(x[3], y[3]))};
}

// Representative of {M, -M}: the lexicographically smaller index tuple.
Mat normalize(const FiniteRing& r, const Mat& m) {
  Mat n{r.neg(m[0]), r.neg(m[1]), r.neg(m[2]), r.neg(m[3])};
  return n < m ? n : m;
}

struct MatHash {
  std::size_t operator()(const Mat& m) const {
    std::size_t h = 0;
    for (auto x : m) h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::uint64_t>{}(x);
    return h;
  }
};

Mat reduce(const FiniteRing& r, const PSL2Element& g) {
  return normalize(r, {r.of(g.a()), r.of(g.b()), r.of(g.c()), r.of(g.d())});
}

RingElement oracle_modulus(int q, std::int64_t n) {
  if (q == 5) return RingElement(q, 2 * n);
  if (q == 3 || q == 4 || q == 6) return RingElement(q, n) * RingElement::lambda(q);
  throw DomainError("congruence oracle covers q = 3, 4, 5, 6 only");
}

}  // namespace

std::optional<std::uint64_t> congruence_image_size(const RingElement& modulus, std::uint64_t max_size) {
  const QuotientRing ring(modulus, std::max<std::uint64_t>(max_size, 1));
  const FiniteRing fr(ring);
  const int q = modulus.q();
  const Mat s = reduce(fr, PSL2Element::S(q));
  const Mat t = reduce(fr, PSL2Element::T(q));
  const Mat id = reduce(fr, PSL2Element::identity(q));
  std::unordered_set<Mat, MatHash> seen{id};
  std::deque<Mat> queue{id};
  while (!queue.empty()) {
    const Mat m = queue.front();
    queue.pop_front();
    for (const Mat* gen : {&s, &t}) {
      Mat x = normalize(fr, mat_mul(fr, *gen, m));
      if (seen.insert(x).second) {
        if (seen.size() > max_size) return std::nullopt;
        queue.push_back(x);
      }
    }
  }
  return seen.size();
}

OracleResult congruence_oracle(const CombinatorialMap& map, const OracleOptions& opts) {
  const int q = map.q;
  OracleResult out;
  const std::int64_t n = invariants(map).level;
  out.modulus = oracle_modulus(q, n);
  if (opts.base_dart < 0 || opts.base_dart >= map.omega)
    throw DomainError("congruence_oracle: base dart out of range");

  std::unique_ptr<QuotientRing> ring;
  try {
    ring = std::make_unique<QuotientRing>(out.modulus, std::max<std::uint64_t>(opts.max_size, 1));
  } catch (const ResourceLimit& e) {
    out.note = e.what();
    return out;
  }
  auto image = congruence_image_size(out.modulus, opts.max_size);
  if (!image) {
    out.note = "matrix group larger than " + std::to_string(opts.max_size);
    return out;
  }
  out.image_size = *image;

  const FiniteRing fr(*ring);
  const Mat s = reduce(fr, PSL2Element::S(q));
  const Mat t = reduce(fr, PSL2Element::T(q));
  const Mat id = reduce(fr, PSL2Element::identity(q));
  // (dart, matrix) pairs; matrices are interned to small ids
  std::unordered_map<Mat, std::uint32_t, MatHash> ids;
  std::vector<Mat> mats;
  auto intern = [&](const Mat& m) {
    auto [it, fresh] = ids.emplace(m, static_cast<std::uint32_t>(mats.size()));
    if (fresh) mats.push_back(m);
    return it->second;
  };
  std::unordered_set<std::uint64_t> seen;
  auto key = [&](int dart, std::uint32_t mid) {
    return static_cast<std::uint64_t>(mid) * static_cast<std::uint64_t>(map.omega) +
           static_cast<std::uint64_t>(dart);
  };
  std::deque<std::pair<int, std::uint32_t>> queue;
  const std::uint32_t id0 = intern(id);
  seen.insert(key(opts.base_dart, id0));
  queue.push_back({opts.base_dart, id0});
  const std::pair<const Permutation*, const Mat*> gens[] = {{&map.r1, &s}, {&map.r0, &t}};
  while (!queue.empty()) {
    auto [x, mid] = queue.front();
    queue.pop_front();
    for (const auto& [perm, mat] : gens) {
      const int y = (*perm)(x);
      const std::uint32_t nid = intern(normalize(fr, mat_mul(fr, *mat, mats[mid])));
      if (seen.insert(key(y, nid)).second) {
        if (seen.size() > opts.max_size) {
          out.note = "orbit larger than " + std::to_string(opts.max_size);
          out.image_size = *image;
          return out;
        }
        queue.push_back({y, nid});
      }
    }
  }
  out.orbit_size = seen.size();
  out.verdict = out.orbit_size == out.image_size ? Verdict::Congruence : Verdict::NonCongruence;
  return out;
}

}  // namespace hecke
