#include "hecke/quotient_ring.hpp"

#include <string>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

__int128 floor_div(__int128 a, __int128 b) {
  __int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Row-style Hermite normal form: upper triangular, positive pivots, entries
// above each pivot reduced into [0, pivot).
std::vector<std::vector<BigInt>> hermite_rows(std::vector<std::vector<BigInt>> rows) {
  const std::size_t d = rows.size();
  for (std::size_t c = 0; c < d; ++c) {
    // Euclid on column c among rows c..d-1
    for (;;) {
      std::size_t best = d;
      for (std::size_t r = c; r < d; ++r)
        if (rows[r][c] != 0 && (best == d || abs(rows[r][c]) < abs(rows[best][c]))) best = r;
      if (best == d) throw InternalError("ideal lattice is not full rank");
      std::swap(rows[c], rows[best]);
      bool done = true;
      for (std::size_t r = c + 1; r < d; ++r) {
        if (rows[r][c] == 0) continue;
        BigInt f = rows[r][c] / rows[c][c];
        for (std::size_t k = c; k < d; ++k) rows[r][k] -= f * rows[c][k];
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[c][c] < 0)
      for (auto& x : rows[c]) x = -x;
  }
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t r = 0; r < c; ++r) {
      BigInt f = rows[r][c] / rows[c][c];
      if (rows[r][c] - f * rows[c][c] < 0) f -= 1;
      for (std::size_t k = c; k < d; ++k) rows[r][k] -= f * rows[c][k];
    }
  }
  return rows;
}

}  // namespace

QuotientRing::QuotientRing(const RingElement& generator, std::uint64_t max_size)
    : q_(generator.q()), generator_(generator) {
  if (generator.is_zero()) throw DomainError("quotient_ring: zero generator");
  const auto d = static_cast<std::size_t>(generator.context().degree);
  std::vector<std::vector<BigInt>> rows;
  RingElement v = generator;
  const RingElement lam = RingElement::lambda(q_);
  for (std::size_t j = 0; j < d; ++j) {
    rows.push_back(v.coefficients());
    v *= lam;
  }
  basis_ = hermite_rows(std::move(rows));

  BigInt total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= basis_[i][i];
  if (total > BigInt(max_size))
    throw ResourceLimit("quotient ring of size " + total.str() + " exceeds limit " +
                        std::to_string(max_size));
  size_ = total.convert_to<std::uint64_t>();
  for (std::size_t i = 0; i < d; ++i) {
    pivots_.push_back(basis_[i][i].convert_to<std::int64_t>());
    std::vector<__int128> row;
    for (std::size_t k = 0; k < d; ++k) {
      // entries are bounded by the pivots, which are bounded by size_
      row.push_back(static_cast<__int128>(basis_[i][k].convert_to<long long>()));
    }
    basis_small_.push_back(std::move(row));
  }
  for (const auto& c : generator.context().minpoly.coefficients())
    minpoly_.push_back(c.convert_to<std::int64_t>());
}

QuotientElement QuotientRing::reduce_wide(std::vector<__int128> v) const {
  const std::size_t d = pivots_.size();
  for (std::size_t i = 0; i < d; ++i) {
    __int128 t = floor_div(v[i], pivots_[i]);
    if (t == 0) continue;
    for (std::size_t k = i; k < d; ++k) v[k] -= t * basis_small_[i][k];
  }
  QuotientElement out;
  out.residue.reserve(d);
  for (std::size_t i = 0; i < d; ++i) out.residue.push_back(static_cast<std::int64_t>(v[i]));
  return out;
}

QuotientElement QuotientRing::reduce(const RingElement& a) const {
  if (a.q() != q_) throw DomainError("quotient ring: element over a different q");
  // Reduce big coefficients first so they fit the wide path.
  const std::size_t d = pivots_.size();
  std::vector<BigInt> v = a.coefficients();
  for (std::size_t i = 0; i < d; ++i) {
    BigInt t = v[i] / basis_[i][i];
    if (v[i] - t * basis_[i][i] < 0) t -= 1;
    if (t == 0) continue;
    for (std::size_t k = i; k < d; ++k) v[k] -= t * basis_[i][k];
  }
  QuotientElement out;
  for (const auto& x : v) out.residue.push_back(x.convert_to<std::int64_t>());
  return out;
}

QuotientElement QuotientRing::zero() const {
  return QuotientElement{std::vector<std::int64_t>(pivots_.size(), 0)};
}

QuotientElement QuotientRing::one() const { return reduce(RingElement(q_, 1)); }

QuotientElement QuotientRing::add(const QuotientElement& a, const QuotientElement& b) const {
  std::vector<__int128> v(pivots_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.residue[i] + b.residue[i];
  return reduce_wide(std::move(v));
}

QuotientElement QuotientRing::sub(const QuotientElement& a, const QuotientElement& b) const {
  std::vector<__int128> v(pivots_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.residue[i] - b.residue[i];
  return reduce_wide(std::move(v));
}

QuotientElement QuotientRing::neg(const QuotientElement& a) const {
  std::vector<__int128> v(pivots_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -static_cast<__int128>(a.residue[i]);
  return reduce_wide(std::move(v));
}

QuotientElement QuotientRing::mul(const QuotientElement& a, const QuotientElement& b) const {
  const std::size_t d = pivots_.size();
  std::vector<__int128> prod(2 * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.residue[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      prod[i + j] += static_cast<__int128>(a.residue[i]) * b.residue[j];
  }
  // reduce modulo the monic minimal polynomial, then by the ideal lattice;
  // interleave lattice reduction so values stay small
  for (std::size_t k = 2 * d; k-- > d;) {
    __int128 c = prod[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) prod[k - d + j] -= c * minpoly_[j];
    std::vector<__int128> low(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
    QuotientElement r = reduce_wide(std::move(low));
    for (std::size_t j = 0; j < d; ++j) prod[j] = r.residue[j];
  }
  prod.resize(d);
  return reduce_wide(std::move(prod));
}

std::uint64_t QuotientRing::index_of(const QuotientElement& a) const {
  std::uint64_t idx = 0;
  for (std::size_t i = pivots_.size(); i-- > 0;)
    idx = idx * static_cast<std::uint64_t>(pivots_[i]) + static_cast<std::uint64_t>(a.residue[i]);
  return idx;
}

QuotientElement QuotientRing::from_index(std::uint64_t idx) const {
  QuotientElement out;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    out.residue.push_back(static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(pivots_[i])));
    idx /= static_cast<std::uint64_t>(pivots_[i]);
  }
  return out;
}

std::vector<QuotientElement> QuotientRing::elements() const {
  std::vector<QuotientElement> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(from_index(i));
  return out;
}

}  // namespace hecke
