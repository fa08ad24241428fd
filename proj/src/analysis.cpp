#include "hecke/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "hecke/errors.hpp"
#include "hecke/validate.hpp"

namespace hecke {

PermGroup monodromy(const CombinatorialMap& map) { return PermGroup(map.omega, {map.r1, map.r2}); }

bool is_normal(const CombinatorialMap& map) { return monodromy(map).order() == map.omega; }

BigInt core_index(const CombinatorialMap& map) { return monodromy(map).order(); }

PermGroup automorphism_group(const CombinatorialMap& map) {
  return centralizer_in_symmetric(monodromy(map));
}

StructureSummary automorphisms(const CombinatorialMap& map, std::uint64_t bound) {
  return structure_summary(automorphism_group(map), bound);
}

bool is_quasi_regular(const CombinatorialMap& map) { return invariants(map).quasi_regular; }

bool is_regular(const CombinatorialMap& map) {
  return automorphism_group(map).order() == map.omega;
}

std::int64_t level(const CombinatorialMap& map) { return invariants(map).level; }

std::pair<Permutation, Permutation> f_T_f_U(const CombinatorialMap& map) {
  if (map.q != 3) throw DomainError("f(T), f(U) are only defined for q = 3");
  return {map.r0, map.r1 * map.r0.inverse() * map.r1.inverse()};
}

namespace {

long long inverse_mod(long long a, long long m) {
  if (m == 1) return 0;
  long long t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
  while (nr) {
    long long qt = r / nr;
    t = std::exchange(nt, t - qt * nt);
    r = std::exchange(nr, r - qt * nr);
  }
  if (r != 1) throw InternalError("no modular inverse");
  return ((t % m) + m) % m;
}

}  // namespace

bool hsu_congruence(const Permutation& A, const Permutation& B) {
  const BigInt order = A.order();
  if (order > BigInt(std::numeric_limits<long long>::max() / 32))
    throw ResourceLimit("level too large for the Hsu test");
  const long long n = order.convert_to<long long>();
  if (n == 1) return true;
  long long e = 1;
  while ((n / e) % 2 == 0) e *= 2;
  const long long m = n / e;
  auto one = [](const Permutation& p) { return p.is_identity(); };

  if (e == 1) {
    const long long half = inverse_mod(2, n);
    return one((B.pow(2) * A.pow(-half)).pow(3));
  }
  if (m == 1) {
    const long long fifth = inverse_mod(5, n);
    const Permutation s = A.pow(20) * B.pow(fifth) * A.pow(-4) * B.inverse();
    const Permutation Ai = A.inverse(), Bi = B.inverse();
    if (!one((Ai * B * Ai) * s * (A * Bi * A) * s)) return false;
    if (!one(s.inverse() * B * s * B.pow(-25))) return false;
    return one((s * B.pow(5) * A * Bi * A).pow(3));
  }

  // c = 1 mod m, 0 mod e; d = 0 mod m, 1 mod e
  const long long c = (e * inverse_mod(e, m)) % n;
  const long long d = (m * inverse_mod(m, e)) % n;
  const Permutation a = A.pow(c), b = B.pow(c), l = A.pow(d), r = B.pow(d);
  const long long half = inverse_mod(2, m);
  const long long fifth = inverse_mod(5, e);
  const Permutation s = l.pow(20) * r.pow(fifth) * l.pow(-4) * r.inverse();
  const Permutation ai = a.inverse(), bi = b.inverse(), li = l.inverse(), ri = r.inverse();
  const Permutation abia = a * bi * a;
  const Permutation lril = l * ri * l;
  if (!one(ai * ri * a * r)) return false;
  if (!one(abia.pow(4))) return false;
  if (!one(abia.pow(2) * (ai * b).pow(3))) return false;
  if (!one(abia.pow(2) * (b * b * a.pow(-half)).pow(-3))) return false;
  if (!one((li * r * li) * s * lril * s)) return false;
  if (!one(s.inverse() * r * s * r.pow(-25))) return false;
  return one(lril.pow(2) * (s * r.pow(5) * l * ri * l).pow(-3));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Congruence:
      return "congruence";
    case Verdict::NonCongruence:
      return "non-congruence";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

AnalysisReport analyze(const HeckeFareySymbol& hfs, const AnalysisOptions& opts) {
  DecomposeOptions dopts;
  dopts.face_budget = opts.face_budget;
  auto violations = validate_hfs(hfs, dopts);
  if (!violations.empty()) {
    std::string msg;
    for (const auto& v : violations) msg += (msg.empty() ? "" : ", ") + v.to_string();
    throw InvalidSymbol(code_name(violations.front().code), msg);
  }

  AnalysisReport rep{hfs, build_map(hfs, dopts), {}, {}, 0, 0, false, {}, {}, false, false, {}};
  const CombinatorialMap& map = rep.map;
  rep.invariants = invariants(map);
  rep.generators = side_pairing_generators(hfs);
  const PermGroup g = monodromy(map);
  rep.monodromy_order = g.order();
  rep.core_index = rep.monodromy_order;
  rep.normal = rep.monodromy_order == map.omega;
  const PermGroup aut = centralizer_in_symmetric(g);
  rep.aut = structure_summary(aut, opts.structure_bound);
  rep.regular = aut.order() == map.omega;
  rep.quasi_regular = rep.invariants.quasi_regular;
  if (rep.regular != rep.normal) throw InternalError("regularity and normality disagree");
  rep.normalizer_note = (hfs.q == 3 || hfs.q == 4 || hfs.q == 6)
                            ? "automorphism group is N(X)/X with N(X) the normalizer in G_q"
                            : "automorphism group is N(X)/X with N(X) the normalizer in PSL(2,R)";

  CongruenceReport& cr = rep.congruence;
  cr.applicable = hfs.q <= 6;
  if (!cr.applicable) {
    cr.method = "n/a";
    return rep;
  }
  if (opts.congruence == CongruenceMethod::Off) {
    cr.method = "off";
    return rep;
  }
  const bool want_hsu = hfs.q == 3 && opts.congruence != CongruenceMethod::Oracle;
  const bool want_oracle = opts.congruence != CongruenceMethod::Hsu || hfs.q != 3;
  if (want_hsu) {
    auto [ft, fu] = f_T_f_U(map);
    cr.hsu = hsu_congruence(ft, fu);
  }
  if (want_oracle) {
    OracleOptions oo;
    oo.max_size = opts.max_oracle_size;
    cr.oracle = congruence_oracle(map, oo);
    cr.modulus = cr.oracle->modulus;
  }
  cr.method = want_hsu && want_oracle ? "both" : (want_hsu ? "hsu" : "oracle");
  if (cr.oracle && cr.oracle->verdict != Verdict::Inconclusive) {
    const bool oracle_says = cr.oracle->verdict == Verdict::Congruence;
    if (cr.hsu && *cr.hsu != oracle_says)
      throw InternalError("Hsu test and congruence oracle disagree on " + serialize_hfs(hfs));
    cr.verdict = cr.oracle->verdict;
  } else if (cr.hsu) {
    cr.verdict = *cr.hsu ? Verdict::Congruence : Verdict::NonCongruence;
  } else {
    cr.verdict = Verdict::Inconclusive;
  }
  return rep;
}

}  // namespace hecke
