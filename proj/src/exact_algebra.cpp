#include "hecke/exact_algebra.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

using Poly = std::vector<BigInt>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Exact division by a monic divisor; throws if the remainder is nonzero.
Poly poly_div_monic(Poly num, const Poly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw InternalError("cyclotomic division underflow");
  Poly quot(num.size() - dd, BigInt(0));
  for (std::size_t k = num.size(); k-- > dd;) {
    BigInt c = num[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw InternalError("cyclotomic division left a remainder");
  trim(quot);
  return quot;
}

const Poly& cyclotomic(int m) {
  static std::map<int, Poly> cache;
  static std::mutex mu;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  Poly p(static_cast<std::size_t>(m) + 1, BigInt(0));
  p[0] = -1;
  p[m] = 1;
  for (int k = 1; k < m; ++k)
    if (m % k == 0) p = poly_div_monic(p, cyclotomic(k));
  std::lock_guard lock(mu);
  return cache.emplace(m, std::move(p)).first->second;
}

// sign of psi(a / 2^bits) for an integer polynomial psi
int sign_at_dyadic(const IntPolynomial& psi, const BigInt& a, unsigned bits) {
  const int d = psi.degree();
  BigInt acc = 0;
  BigInt apow = 1;
  for (int i = 0; i <= d; ++i) {
    acc += psi.coefficient(i) * apow * (BigInt(1) << (bits * static_cast<unsigned>(d - i)));
    apow *= a;
  }
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

std::unique_ptr<RingContext> make_context(int q) {
  auto ctx = std::make_unique<RingContext>();
  ctx->q = q;
  ctx->minpoly = minimal_polynomial(q);
  ctx->degree = ctx->minpoly.degree();
  if (ctx->degree == 1) {
    // lambda_3 = 1 is an integer; keep a trivially exact bracket.
    ctx->lambda_lo = -ctx->minpoly.coefficient(0);
    ctx->lambda_bits = 0;
    return ctx;
  }
  // Isolate the largest root 2cos(pi/q) starting from a floating guess. The
  // neighbouring conjugate 2cos(3pi/q) is far further away than the bracket.
  const unsigned bits = 40;
  const double v = 2.0 * std::cos(std::numbers::pi / q);
  BigInt m(static_cast<long long>(std::floor(std::ldexp(v, static_cast<int>(bits)))));
  BigInt lo = m - 16, hi = m + 16;
  int slo = sign_at_dyadic(ctx->minpoly, lo, bits);
  int shi = sign_at_dyadic(ctx->minpoly, hi, bits);
  if (slo == 0 || shi == 0 || slo == shi) throw InternalError("failed to isolate lambda_q");
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    int s = sign_at_dyadic(ctx->minpoly, mid, bits);
    if (s == 0) throw InternalError("lambda_q is not irrational");
    if (s == slo)
      lo = mid;
    else
      hi = mid;
  }
  ctx->lambda_lo = lo;
  ctx->lambda_bits = bits;
  return ctx;
}

// Bounds of sum c_i lambda^i, scaled by 2^(bits*(d-1)), for lambda in [lo, lo+1]/2^bits.
std::pair<BigInt, BigInt> interval_value(const std::vector<BigInt>& c, const BigInt& lo,
                                         unsigned bits) {
  const std::size_t d = c.size();
  BigInt lo_sum = 0, hi_sum = 0;
  BigInt lo_pow = 1, hi_pow = 1;
  const BigInt hi = lo + 1;
  for (std::size_t i = 0; i < d; ++i) {
    BigInt scale = BigInt(1) << (bits * static_cast<unsigned>(d - 1 - i));
    if (c[i] >= 0) {
      lo_sum += c[i] * lo_pow * scale;
      hi_sum += c[i] * hi_pow * scale;
    } else {
      lo_sum += c[i] * hi_pow * scale;
      hi_sum += c[i] * lo_pow * scale;
    }
    lo_pow *= lo;
    hi_pow *= hi;
  }
  return {lo_sum, hi_sum};
}

}  // namespace

// ---------------------------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim(coeffs_);
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i].convert_to<double>();
  return acc;
}

std::string IntPolynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? '-' : '+');
    }
    if (i == 0 || mag != 1) out << mag;
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
    first = false;
  }
  return out.str();
}

IntPolynomial minimal_polynomial(int q) {
  if (q < 3) throw DomainError("minimal_polynomial: q must be >= 3, got " + std::to_string(q));
  // Phi_{2q}(z) = z^d * psi(z + 1/z) with psi the minimal polynomial of 2cos(pi/q).
  const Poly& phi = cyclotomic(2 * q);
  const std::size_t d = (phi.size() - 1) / 2;
  // chebyshev-like P_k with P_k(z + 1/z) = z^k + z^-k
  std::vector<Poly> P;
  P.push_back({BigInt(2)});
  P.push_back({BigInt(0), BigInt(1)});
  for (std::size_t k = 2; k <= d; ++k) {
    Poly next = poly_mul(P[k - 1], {BigInt(0), BigInt(1)});
    next.resize(std::max(next.size(), P[k - 2].size()), BigInt(0));
    for (std::size_t j = 0; j < P[k - 2].size(); ++j) next[j] -= P[k - 2][j];
    trim(next);
    P.push_back(std::move(next));
  }
  Poly psi(d + 1, BigInt(0));
  psi[0] = phi[d];
  for (std::size_t k = 1; k <= d; ++k)
    for (std::size_t j = 0; j < P[k].size(); ++j) psi[j] += phi[d + k] * P[k][j];
  return IntPolynomial(std::move(psi));
}

const RingContext& ring_context(int q) {
  if (q < 3) throw DomainError("Hecke group index q must be >= 3, got " + std::to_string(q));
  static std::map<int, std::unique_ptr<RingContext>> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, make_context(q)).first;
  return *it->second;
}

// ---------------------------------------------------------------------------

RingElement::RingElement(const RingContext* ctx, std::vector<BigInt> coeffs)
    : ctx_(ctx), coeffs_(std::move(coeffs)) {
  const auto d = static_cast<std::size_t>(ctx_->degree);
  const auto& m = ctx_->minpoly.coefficients();
  // reduce against the monic minimal polynomial, highest degree first
  for (std::size_t k = coeffs_.size(); k-- > d;) {
    BigInt c = coeffs_[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) coeffs_[k - d + j] -= c * m[j];
  }
  coeffs_.resize(d, BigInt(0));
}

RingElement::RingElement(int q) : RingElement(&ring_context(q), {}) {}

RingElement::RingElement(int q, long long value) : RingElement(q, BigInt(value)) {}

RingElement::RingElement(int q, BigInt value) : RingElement(&ring_context(q), {std::move(value)}) {}

RingElement RingElement::lambda(int q) {
  return RingElement(&ring_context(q), {BigInt(0), BigInt(1)});
}

RingElement RingElement::from_coefficients(int q, std::vector<BigInt> coeffs) {
  return RingElement(&ring_context(q), std::move(coeffs));
}

bool RingElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool RingElement::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

void RingElement::check_same_ring(const RingElement& o) const {
  if (ctx_ != o.ctx_)
    throw DomainError("ring elements over different q (" + std::to_string(ctx_->q) + " vs " +
                      std::to_string(o.ctx_->q) + ")");
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  check_same_ring(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  check_same_ring(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
  check_same_ring(o);
  Poly prod(2 * coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  *this = RingElement(ctx_, std::move(prod));
  return *this;
}

bool operator==(const RingElement& a, const RingElement& b) {
  a.check_same_ring(b);
  return a.coeffs_ == b.coeffs_;
}

RingElement RingElement::pow(unsigned k) const {
  RingElement result(ctx_, {BigInt(1)});
  RingElement base = *this;
  while (k) {
    if (k & 1u) result *= base;
    base *= base;
    k >>= 1u;
  }
  return result;
}

double RingElement::approx() const {
  const double lam = 2.0 * std::cos(std::numbers::pi / ctx_->q);
  double acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * lam + coeffs_[i].convert_to<double>();
  return acc;
}

// ---------------------------------------------------------------------------

int sign_of(const RingElement& a) {
  if (a.is_zero()) return 0;
  const RingContext& ctx = a.context();
  if (ctx.degree == 1) return a.coefficients()[0] > 0 ? 1 : -1;

  BigInt lo = ctx.lambda_lo;
  unsigned bits = ctx.lambda_bits;
  const int slo = sign_at_dyadic(ctx.minpoly, lo, bits);
  for (;;) {
    auto [vlo, vhi] = interval_value(a.coefficients(), lo, bits);
    if (vlo > 0) return 1;
    if (vhi < 0) return -1;
    // Halve the bracket 32 times. A nonzero element is a nonzero real, so this ends.
    for (int step = 0; step < 32; ++step) {
      lo <<= 1;
      ++bits;
      BigInt mid = lo + 1;
      const int s = sign_at_dyadic(ctx.minpoly, mid, bits);
      if (s == slo) lo = mid;
    }
  }
}

int compare(const RingElement& a, const RingElement& b) { return sign_of(a - b); }

// ---------------------------------------------------------------------------

RationalRingElement::RationalRingElement(int q, std::vector<BigRational> coeffs)
    : q_(q), coeffs_(std::move(coeffs)) {
  coeffs_.resize(static_cast<std::size_t>(ring_context(q).degree), BigRational(0));
}

RationalRingElement::RationalRingElement(const RingElement& a) : q_(a.q()) {
  for (const auto& c : a.coefficients()) coeffs_.emplace_back(c);
}

bool RationalRingElement::is_integral() const {
  for (const auto& c : coeffs_)
    if (denominator(c) != 1) return false;
  return true;
}

RingElement RationalRingElement::to_integral() const {
  if (!is_integral()) throw DomainError("rational ring element is not integral");
  std::vector<BigInt> out;
  for (const auto& c : coeffs_) out.push_back(numerator(c));
  return RingElement::from_coefficients(q_, std::move(out));
}

std::optional<RingElement> divide_exact(const RingElement& a, const RingElement& b) {
  if (a.q() != b.q()) throw DomainError("divide_exact: mixed q");
  if (b.is_zero()) throw DomainError("divide_exact: division by zero");
  const int q = a.q();
  const auto d = static_cast<std::size_t>(a.context().degree);

  // Column j of the multiplication-by-b matrix is b * lambda^j.
  std::vector<std::vector<BigRational>> m(d, std::vector<BigRational>(d + 1));
  RingElement col = b;
  const RingElement lam = RingElement::lambda(q);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = BigRational(col.coefficients()[i]);
    col *= lam;
  }
  for (std::size_t i = 0; i < d; ++i) m[i][d] = BigRational(a.coefficients()[i]);

  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (piv < d && m[piv][c] == 0) ++piv;
    if (piv == d) throw InternalError("divide_exact: singular multiplication matrix");
    std::swap(m[piv], m[c]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      BigRational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<BigRational> x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = m[i][d] / m[i][i];
  RationalRingElement sol(q, std::move(x));
  if (!sol.is_integral()) return std::nullopt;
  return sol.to_integral();
}

std::optional<RingElement> unit_inverse(const RingElement& u) {
  if (u.is_zero()) return std::nullopt;
  return divide_exact(RingElement(u.q(), 1), u);
}

}  // namespace hecke
