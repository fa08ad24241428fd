#include <map>

#include "hecke/errors.hpp"
#include "hecke/hfs.hpp"

namespace hecke {

namespace {

// (c a; d b) for the even line (a/b, c/d); determinant cb - ad.
PSL2Element line_matrix(const Cusp& u, const Cusp& w) {
  return PSL2Element(w.num, u.num, w.den, u.den);
}

// Parabolic free pairings are reported as the positive translation about
// their fixed cusp: with the trace +2 representative, c < 0, or c == 0 and b > 0.
PSL2Element orient_parabolic(const PSL2Element& g) {
  const int q = g.q();
  const RingElement tr = g.trace();
  if (tr != RingElement(q, 2) && tr != RingElement(q, -2)) return g;
  const int flip = tr == RingElement(q, 2) ? 1 : -1;
  const int sc = sign_of(g.c()) * flip;
  const int sb = sign_of(g.b()) * flip;
  if (sc < 0 || (sc == 0 && sb > 0)) return g;
  return g.inverse();
}

}  // namespace

PSL2Element pairing_circle(const Cusp& u, const Cusp& w) {
  const PSL2Element m = line_matrix(u, w);
  return m * PSL2Element::S(u.q()) * m.inverse();
}

PSL2Element pairing_bullet(const Cusp& u, const Cusp& w) {
  const PSL2Element m = line_matrix(u, w);
  return m * PSL2Element::R(u.q()) * m.inverse();
}

PSL2Element pairing_free(const Cusp& u1, const Cusp& w1, const Cusp& u2, const Cusp& w2) {
  const PSL2Element target(u2.num, -w2.num, u2.den, -w2.den);
  return orient_parabolic(target * line_matrix(u1, w1).inverse());
}

PSL2Element pairing_er(const QGon& p, int r) {
  const int q = p.q();
  if (r <= 1 || r >= q || q % r != 0) throw DomainError("pairing_er: need 1 < r < q, r | q");
  const Cusp& p0 = p.cusps[0];
  const Cusp& p1 = p.cusps[1];
  // carries (-1/0, 0/1), the first two cusps of the base q-gon, onto (p0, p1)
  const PSL2Element c(-p0.num, p1.num, -p0.den, p1.den);
  return c * PSL2Element::R(q).pow(q / r) * c.inverse();
}

std::vector<Generator> side_pairing_generators(const HeckeFareySymbol& hfs) {
  std::vector<Generator> out;
  std::map<int, std::size_t> first_free;
  std::map<int, std::size_t> partner;
  for (std::size_t i = 0; i < hfs.labels.size(); ++i) {
    const auto& l = hfs.labels[i];
    if (l.kind != PairingLabel::Kind::Free) continue;
    auto it = first_free.find(l.value);
    if (it == first_free.end()) {
      first_free[l.value] = i;
    } else {
      partner[static_cast<int>(it->second)] = i;
    }
  }
  for (std::size_t i = 0; i < hfs.labels.size(); ++i) {
    const auto& l = hfs.labels[i];
    const Cusp& u = hfs.cusps[i];
    const Cusp& w = hfs.cusps[i + 1];
    switch (l.kind) {
      case PairingLabel::Kind::Circle:
        out.push_back({l, i, i, pairing_circle(u, w)});
        break;
      case PairingLabel::Kind::Bullet:
        out.push_back({l, i, i, pairing_bullet(u, w)});
        break;
      case PairingLabel::Kind::Er:
        out.push_back({l, i, i, pairing_er(reconstruct_er_polygon(u, w, l.value, hfs.q), l.value)});
        break;
      case PairingLabel::Kind::Free: {
        auto it = partner.find(static_cast<int>(i));
        if (it == partner.end()) {
          if (first_free.at(l.value) == i)
            throw InvalidSymbol("UnpairedFreeLabel",
                                "free label " + std::to_string(l.value) + " occurs once");
          break;
        }
        const std::size_t j = it->second;
        out.push_back({l, i, j, pairing_free(u, w, hfs.cusps[j], hfs.cusps[j + 1])});
        break;
      }
    }
  }
  return out;
}

}  // namespace hecke
