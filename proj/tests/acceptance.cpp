// Acceptance checks: one PASS/FAIL line per criterion. All quantities are
// integers and compared exactly.

#include <chrono>
#include <algorithm>
#include <functional>
#include <numeric>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "hecke/analysis.hpp"
#include "hecke/errors.hpp"
#include "hecke/validate.hpp"
#include "support/corpus.hpp"
#include "support/perm_iso.hpp"
#include "support/random_hfs.hpp"

using namespace hecke;
using hecke::testing::corpus_symbol;
using hecke::testing::parse_barred;
using hecke::testing::tuple_isomorphism;

namespace {

// Collects the failed sub-checks of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << " (got " << got << ", want " << want << ")";
      failures_.push_back(os.str());
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_, notes_;
};

RingElement R(int q, const char* s) { return RingElement::parse(q, s); }
PSL2Element M(int q, const char* a, const char* b, const char* c, const char* d) {
  return {R(q, a), R(q, b), R(q, c), R(q, d)};
}

std::ostream& operator<<(std::ostream& os, const PSL2Element& m) { return os << m.to_string(); }
std::ostream& operator<<(std::ostream& os, const std::vector<int>& v) {
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << "]";
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

AnalysisReport analyzed(const std::string& name) { return analyze(corpus_symbol(name)); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void index8_quasi_regular(Check& c) {
  const auto rep = analyzed("g4_index8");
  c.equal(rep.invariants.index, 8, "index");
  c.equal(rep.monodromy_order, 16, "monodromy order");
  c.expect(!rep.normal, "not normal");
  c.equal(rep.aut.order, 4, "Aut order");
  c.expect(rep.aut.exponent == BigInt(2), "Aut exponent 2");
  c.expect(rep.quasi_regular, "quasi-regular");
  c.expect(!rep.regular, "not regular");
}

void index12_not_normal(Check& c) {
  const auto rep = analyzed("psl2z_index12_quasi_regular");
  c.equal(rep.invariants.index, 12, "index");
  c.expect(!rep.normal, "not normal");
}

void principal_level3(Check& c) {
  const auto rep = analyzed("psl2z_index12_principal3");
  c.equal(rep.invariants.index, 12, "index");
  const std::vector<PSL2Element> want = {M(3, "1", "3", "0", "1"), M(3, "2", "-3", "3", "-4"),
                                         M(3, "5", "-12", "3", "-7")};
  c.equal(rep.generators.size(), want.size(), "generator count");
  for (std::size_t i = 0; i < std::min(want.size(), rep.generators.size()); ++i)
    c.equal(rep.generators[i].matrix, want[i], "generator " + std::to_string(i + 1));
  const auto r2 = parse_barred("(1,2,4')(4,6,5')(5,3',1')(6',2',3)", 6, 12);
  const auto r1 = parse_barred("(1,1')(2,2')(3,3')(4,4')(5,5')(6,6')", 6, 12);
  c.expect(tuple_isomorphism({rep.map.r1, rep.map.r2}, {r1, r2}).has_value(), "map isomorphic to the hand reading");
  c.equal(rep.monodromy_order, 12, "monodromy order");
  c.expect(rep.normal, "normal");
  c.expect(rep.congruence.hsu == true, "relation test says congruence");
  c.expect(rep.congruence.oracle && rep.congruence.oracle->verdict == Verdict::Congruence, "oracle says congruence");
  c.expect(rep.congruence.oracle && rep.congruence.oracle->modulus == RingElement(3, 3), "oracle modulus 3");
}

void pentagon_bullets(Check& c) {
  const auto rep = analyzed("g5_index10_bullets");
  c.equal(rep.invariants.index, 10, "index");
  c.equal(rep.map.r1.cycle_lengths(), std::vector<int>(5, 2), "r1 cycle type");
  c.equal(sorted(rep.map.r2.cycle_lengths()), std::vector<int>{1, 1, 1, 1, 1, 5}, "r2 cycle type");
  c.expect(!rep.normal, "not normal");
  c.equal(rep.aut.order, 5, "centralizer order");
  c.expect(rep.aut.cyclic == true, "centralizer cyclic");
}

void g6_index3(Check& c) {
  const auto x = analyzed("g6_index3_normal");
  c.equal(x.invariants.index, 3, "normal one: index");
  c.expect(x.normal, "normal one: normal");
  c.equal(x.aut.order, 3, "normal one: Aut order");
  const auto y = analyzed("g6_index3_gamma0_2");
  c.equal(y.invariants.index, 3, "second: index");
  c.expect(!y.normal, "second: not normal");
  c.equal(y.monodromy_order, 6, "second: monodromy order");
  const RingElement two(6, 2);
  for (const auto& g : y.generators) {
    c.expect(divide_exact(g.matrix.b(), two).has_value(),
             "second: upper-right entry of " + g.matrix.to_string() + " divisible by 2");
    if (divide_exact(g.matrix.c(), two)) c.note("lower-left entry of " + g.matrix.to_string() + " is divisible by 2");
  }
  c.expect(y.congruence.verdict == Verdict::Congruence, "second: oracle verdict congruence");
  c.expect(y.congruence.modulus == R(6, "2L"), "second: modulus 2L");
}

void index7_family(Check& c) {
  const auto m16 = analyzed("psl2z_index7_deg1_6_a");
  c.equal(m16.core_index, 42, "degrees 1,6: core index");
  c.expect(m16.congruence.verdict == Verdict::NonCongruence, "degrees 1,6: non-congruence");
  for (const char* n : {"psl2z_index7_deg7_a", "psl2z_index7_deg7_b"})
    c.expect(analyzed(n).congruence.verdict == Verdict::Congruence, std::string(n) + " congruence");
  for (const char* n : {"psl2z_index7_deg1_6_a", "psl2z_index7_deg1_6_b", "psl2z_index7_deg3_4", "psl2z_index7_deg2_5"})
    c.expect(analyzed(n).congruence.verdict == Verdict::NonCongruence, std::string(n) + " non-congruence");
  for (const char* n : {"psl2z_index7_deg7_a", "psl2z_index7_deg7_b", "psl2z_index7_deg1_6_a",
                        "psl2z_index7_deg1_6_b", "psl2z_index7_deg3_4", "psl2z_index7_deg2_5"}) {
    const auto r = analyzed(n);
    c.expect(!r.normal, std::string(n) + " not normal");
    c.equal(r.invariants.index, 7, std::string(n) + " index");
  }
  const auto inv = analyzed("psl2z_index7_deg7_a").invariants;
  c.equal(inv.tau2, 3, "tau2");
  c.equal(inv.v.at(3), 1, "v3");
  c.equal(inv.v_inf, 1, "v_inf");
  c.equal(inv.vertex_degrees, std::vector<int>{7}, "vertex degree");
  c.equal(inv.genus, 0, "genus");
  c.note("the index-7 family has six members");
}

void index11(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = analyzed("psl2z_index11_noncongruence");
  c.equal(rep.invariants.index, 11, "index");
  const auto [fT, fU] = f_T_f_U(rep.map);
  const auto eT = parse_barred("(1',2',3',4',4,7,3,6,2,5,1)", 7, 11);
  const auto eU = parse_barred("(1',5,2',6,3',7,4',4,3,2,1)", 7, 11);
  c.expect(tuple_isomorphism({fT, fU}, {eT, eU}).has_value(), "(f(T), f(U)) isomorphic to the hand reading");
  c.equal(rep.invariants.level, 11, "level");
  c.expect(rep.congruence.hsu == false, "relation test says non-congruence");
  c.expect(rep.congruence.oracle && rep.congruence.oracle->verdict == Verdict::NonCongruence, "oracle non-congruence");
  c.expect(rep.congruence.oracle && rep.congruence.oracle->image_size == 660, "oracle image size 660");
  c.equal(PermGroup(11, {fT, fU}).order(), 19958400, "<f(T), f(U)> order");
  c.expect(fT.is_even() && fU.is_even(), "f(T), f(U) even");
  const double secs = seconds_since(t0);
  c.expect(secs < 5.0, "runtime under 5 s");
  c.note("runtime " + std::to_string(secs) + " s");
}

void g6_generators(Check& c) {
  const auto h = corpus_symbol("g6_index3_normal");
  const auto gens = side_pairing_generators(h);
  const auto S = PSL2Element::S(6);
  const auto A = M(6, "1", "0", "L", "1");
  const auto B = M(6, "L", "1", "2", "L");
  const std::vector<PSL2Element> want = {S, A * S * A.inverse(), B * S * B.inverse(), PSL2Element::R(6).pow(3)};
  c.equal(gens.size(), want.size(), "generator count");
  for (std::size_t i = 0; i < std::min(gens.size(), want.size()); ++i)
    c.equal(gens[i].matrix, want[i], "generator " + std::to_string(i + 1));
  if (gens.size() == 4) {
    const auto& e2 = gens[3].matrix;
    c.equal(e2, M(6, "-L", "2", "-2", "L"), "e2 element");
    const Cusp half{R(6, "L"), R(6, "2")};
    c.expect(same_cusp(e2.apply(half), Cusp::infinity(6)), "e2 maps L/2 to inf");
    c.expect(same_cusp(e2.apply(Cusp::infinity(6)), half), "e2 maps inf to L/2");
  }
}

void torsion_normal(Check& c) {
  for (int q = 3; q <= 8; ++q) {
    const auto rep = analyzed("qgon_q" + std::to_string(q));
    c.equal(rep.invariants.index, q, "q-gon index at q=" + std::to_string(q));
    c.expect(rep.normal, "q-gon normal at q=" + std::to_string(q));
  }
  const auto two = analyzed("two_bullets");
  c.equal(two.invariants.index, 2, "two 1-gons: index");
  c.expect(two.normal, "two 1-gons: normal");
}

void random_properties(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(20241016);
  int symbols = 0, hsu_compared = 0, inconclusive = 0, noncongruence = 0;
  for (int round = 0; round < 60; ++round) {
    for (int q = 3; q <= 8; ++q) {
      const auto rs = hecke::testing::random_hfs(q, rng, 6);
      const auto& h = rs.symbol;
      const std::string tag = "q=" + std::to_string(q) + " " + serialize_hfs(h);
      ++symbols;
      if (!validate_hfs(h).empty()) {
        c.expect(false, "valid: " + tag);
        continue;
      }
      const auto m = build_map(h);
      const int n = m.omega;
      c.equal(n, rs.expected_index, "index from the gluing history: " + tag);
      c.expect((m.r1 * m.r1).is_identity(), "r1^2: " + tag);
      c.expect(m.r2.pow(q).is_identity(), "r2^q: " + tag);
      c.expect((m.r0 * m.r1 * m.r2).is_identity(), "r0 r1 r2: " + tag);
      const auto g = monodromy(m);
      c.expect(g.is_transitive(), "transitive: " + tag);
      int faces = 0, vertices = 0;
      for (const auto& f : m.faces) faces += static_cast<int>(f.darts.size());
      for (int len : m.r0.cycle_lengths()) vertices += len;
      c.expect(faces == n && vertices == n, "face and vertex sizes sum to the index: " + tag);
      const auto inv = invariants(m);
      const int chi = static_cast<int>(m.r0.cycles().size() + m.r1.cycles().size() + m.r2.cycles().size()) - n;
      c.expect(inv.genus >= 0 && chi == 2 - 2 * inv.genus, "genus and Euler characteristic: " + tag);
      c.expect(is_normal(m) == (centralizer_in_symmetric(g).order() == n), "normal iff |centralizer| = index: " + tag);
      for (const auto& gen : side_pairing_generators(h)) {
        const auto k = gen.label.kind;
        if (k == PairingLabel::Kind::Circle) c.expect(gen.matrix.order(2) == 2, "circle order 2: " + tag);
        if (k == PairingLabel::Kind::Bullet) c.expect(gen.matrix.order(q) == q, "bullet order q: " + tag);
        if (k == PairingLabel::Kind::Er)
          c.expect(gen.matrix.order(q) == gen.label.value, "e_r order r: " + tag);
      }
      if (q == 3) {
        const auto [fT, fU] = f_T_f_U(m);
        OracleOptions o;
        o.max_size = 200000;
        const auto oracle = congruence_oracle(m, o);
        if (oracle.verdict == Verdict::Inconclusive) {
          ++inconclusive;
        } else {
          ++hsu_compared;
          noncongruence += oracle.verdict == Verdict::NonCongruence;
          c.expect(hsu_congruence(fT, fU) == (oracle.verdict == Verdict::Congruence), "relation test = oracle: " + tag);
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  c.expect(symbols >= 200, "at least 200 symbols");
  c.expect(hsu_compared > 0, "some q=3 instances compared");
  c.expect(secs < 120.0, "runtime under 2 minutes");
  c.note(std::to_string(symbols) + " symbols, " + std::to_string(hsu_compared) + " q=3 comparisons (" +
         std::to_string(noncongruence) + " non-congruence), " +
         std::to_string(inconclusive) + " oracle cap hits, " + std::to_string(secs) + " s");
}

std::size_t closure_size(const std::vector<Permutation>& gens, int n, std::size_t cap) {
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> queue{Permutation::identity(n)};
  for (std::size_t i = 0; i < queue.size() && seen.size() <= cap; ++i)
    for (const auto& g : gens) {
      auto x = g * queue[i];
      if (seen.insert(x).second) queue.push_back(x);
    }
  return seen.size();
}

void stabilizer_chain_vs_closure(Check& c) {
  std::mt19937 rng(77);
  int groups = 0, tries = 0;
  while (groups < 100 && tries < 100000) {
    ++tries;
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const int k = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<Permutation> gens;
    for (int i = 0; i < k; ++i) {
      std::vector<int> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 0);
      // Shuffle a random prefix so that small groups are common.
      const int m = std::uniform_int_distribution<int>(1, n)(rng);
      std::shuffle(img.begin(), img.begin() + m, rng);
      gens.push_back(Permutation(img));
    }
    const std::size_t size = closure_size(gens, n, 10000);
    if (size > 10000) continue;
    ++groups;
    c.equal(PermGroup(n, gens).order(), size, "order of group " + std::to_string(groups));
  }
  c.equal(groups, 100, "groups checked");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"index-8 quasi-regular subgroup of G_4", index8_quasi_regular},
      {"index-12 quasi-regular subgroup of PSL(2,Z) is not normal", index12_not_normal},
      {"level-3 principal congruence subgroup", principal_level3},
      {"pentagon with five 1-gons in G_5", pentagon_bullets},
      {"index-3 subgroups of G_6", g6_index3},
      {"index-7 subgroups of PSL(2,Z)", index7_family},
      {"index-11 non-congruence subgroup", index11},
      {"generators of the normal index-3 subgroup of G_6", g6_generators},
      {"torsion normal subgroups", torsion_normal},
      {"random symbol properties", random_properties},
      {"stabilizer chain against brute force", stabilizer_chain_vs_closure},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failures().empty();
    failed += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << (i + 1) << " " << criteria[i].first << "\n";
    for (const auto& f : c.failures()) std::cout << "     failed: " << f << "\n";
    for (const auto& n : c.notes()) std::cout << "     note: " << n << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
