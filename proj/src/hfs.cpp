#include "hecke/hfs.hpp"

#include "hecke/errors.hpp"

namespace hecke {

namespace {

bool single_term(const RingElement& x) {
  int nonzero = 0;
  for (const auto& c : x.coefficients())
    if (c != 0) ++nonzero;
  return nonzero <= 1;
}

std::string wrap(const RingElement& x) {
  std::string s = x.to_string();
  return single_term(x) ? s : "(" + s + ")";
}

}  // namespace

Cusp Cusp::neg_infinity(int q) { return {RingElement(q, -1), RingElement(q)}; }
Cusp Cusp::infinity(int q) { return {RingElement(q, 1), RingElement(q)}; }
Cusp Cusp::integer(int q, long long n) { return {RingElement(q, n), RingElement(q, 1)}; }

double Cusp::approx() const { return num.approx() / den.approx(); }

std::string Cusp::to_string() const {
  if (den.is_zero() && num == RingElement(q(), -1)) return "-inf";
  if (den.is_zero() && num.is_one()) return "inf";
  return wrap(num) + "/" + wrap(den);
}

RingElement cross(const Cusp& u, const Cusp& w) { return w.num * u.den - u.num * w.den; }

bool same_cusp(const Cusp& u, const Cusp& w) { return cross(u, w).is_zero(); }

int compare_cusps(const Cusp& u, const Cusp& w) {
  const bool ui = u.is_infinite(), wi = w.is_infinite();
  if (ui || wi) {
    const int su = ui ? sign_of(u.num) : 0;
    const int sw = wi ? sign_of(w.num) : 0;
    return su > sw ? 1 : (su < sw ? -1 : 0);
  }
  return -sign_of(cross(u, w)) * sign_of(u.den) * sign_of(w.den);
}

std::string PairingLabel::to_string() const {
  switch (kind) {
    case Kind::Circle:
      return "o";
    case Kind::Bullet:
      return "b";
    case Kind::Free:
      return std::to_string(value);
    case Kind::Er:
      return "e" + std::to_string(value);
  }
  return "?";
}

PSL2Element::PSL2Element(RingElement a, RingElement b, RingElement c, RingElement d)
    : PSL2Element(std::move(a), std::move(b), std::move(c), std::move(d), true) {}

PSL2Element::PSL2Element(RingElement a, RingElement b, RingElement c, RingElement d, bool checked)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (checked && !(a_ * d_ - b_ * c_).is_one())
    throw DomainError("matrix (" + a_.to_string() + " " + b_.to_string() + "; " + c_.to_string() +
                      " " + d_.to_string() + ") does not have determinant 1");
  for (const RingElement* e : {&a_, &b_, &c_, &d_}) {
    const int s = sign_of(*e);
    if (s == 0) continue;
    if (s < 0) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
      d_ = -d_;
    }
    break;
  }
}

PSL2Element PSL2Element::identity(int q) {
  return {RingElement(q, 1), RingElement(q), RingElement(q), RingElement(q, 1)};
}
PSL2Element PSL2Element::S(int q) {
  return {RingElement(q), RingElement(q, 1), RingElement(q, -1), RingElement(q)};
}
PSL2Element PSL2Element::T(int q) {
  return {RingElement(q, 1), RingElement::lambda(q), RingElement(q), RingElement(q, 1)};
}
PSL2Element PSL2Element::R(int q) {
  return {RingElement(q), RingElement(q, 1), RingElement(q, -1), RingElement::lambda(q)};
}

bool PSL2Element::is_identity() const {
  return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_one();
}

PSL2Element PSL2Element::operator*(const PSL2Element& o) const {
  return PSL2Element(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_,
                     c_ * o.b_ + d_ * o.d_, false);
}

PSL2Element PSL2Element::inverse() const { return PSL2Element(d_, -b_, -c_, a_, false); }

PSL2Element PSL2Element::pow(long long k) const {
  PSL2Element base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  PSL2Element result = identity(q());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::optional<int> PSL2Element::order(int max_order) const {
  PSL2Element x = *this;
  for (int k = 1; k <= max_order; ++k) {
    if (x.is_identity()) return k;
    x = x * *this;
  }
  return std::nullopt;
}

Cusp PSL2Element::apply(const Cusp& x) const {
  return {a_ * x.num + b_ * x.den, c_ * x.num + d_ * x.den};
}

std::string PSL2Element::to_string() const {
  return "(" + a_.to_string() + " " + b_.to_string() + "; " + c_.to_string() + " " +
         d_.to_string() + ")";
}

std::optional<int> QGon::position(const Cusp& x) const {
  for (int i = 0; i < q(); ++i)
    if (same_cusp(cusps[static_cast<std::size_t>(i)], x)) return i;
  return std::nullopt;
}

Cusp qgon_next(const Cusp& prev, const Cusp& curr) {
  if (!cross(prev, curr).is_one())
    throw DomainError("qgon_next: cusps " + prev.to_string() + ", " + curr.to_string() +
                      " are not adjacent");
  const RingElement lam = RingElement::lambda(curr.q());
  return {lam * curr.num - prev.num, lam * curr.den - prev.den};
}

QGon qgon_complete(const Cusp& c1, const Cusp& c2, int q) {
  if (c1.q() != q) throw DomainError("qgon_complete: cusp ring does not match q");
  QGon p;
  p.cusps = {c1, c2};
  for (int i = 2; i <= q; ++i) {
    const auto n = p.cusps.size();
    p.cusps.push_back(qgon_next(p.cusps[n - 2], p.cusps[n - 1]));
  }
  if (!same_cusp(p.cusps.back(), c1)) throw InternalError("q-gon recurrence did not close");
  return p;
}

QGon reconstruct_er_polygon(const Cusp& x_left, const Cusp& x_right, int r, int q) {
  auto fail = [&](const std::string& why) -> InvalidSymbol {
    return InvalidSymbol("InvalidErAdjacency", "(" + x_left.to_string() + ", " +
                         x_right.to_string() + ") with e" + std::to_string(r) + ": " + why);
  };
  if (r <= 1 || r >= q || q % r != 0) throw DomainError("e_r label needs 1 < r < q, r | q");
  const RingElement det = cross(x_left, x_right);
  if (det.is_one()) throw fail("cusps are adjacent");
  if (det.is_zero()) throw fail("cusps coincide");
  const int s = q - q / r;
  const RingElement lam = RingElement::lambda(q);
  // P_0 = 0, P_1 = 1, P_{k+1} = lambda P_k - P_{k-1}
  RingElement p_prev(q), p_cur(q, 1);
  for (int k = 1; k < s; ++k) {
    RingElement nxt = lam * p_cur - p_prev;
    p_prev = std::move(p_cur);
    p_cur = std::move(nxt);
  }
  // x_right is t * (P_s y - P_{s-1} x_left) for a unit t
  auto t = divide_exact(p_cur, det);
  if (!t || !unit_inverse(*t)) throw fail("no q-gon of this shape contains both cusps");
  auto yn = divide_exact(*t * x_right.num + p_prev * x_left.num, p_cur);
  auto yd = divide_exact(*t * x_right.den + p_prev * x_left.den, p_cur);
  if (!yn || !yd) throw fail("interior cusp is not integral");
  const Cusp y{*yn, *yd};
  QGon p = qgon_complete(x_left, y, q);
  if (!same_cusp(p.cusps[static_cast<std::size_t>(s)], x_right))
    throw InternalError("e_r polygon reconstruction is inconsistent");
  return p;
}

}  // namespace hecke
