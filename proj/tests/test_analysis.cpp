#include <map>

#include "doctest.h"
#include "hecke/analysis.hpp"
#include "hecke/errors.hpp"
#include "hecke/report_json.hpp"
#include "support/corpus.hpp"
#include "support/perm_iso.hpp"

using namespace hecke;
using hecke::testing::corpus_symbol;
using hecke::testing::parse_barred;
using hecke::testing::tuple_isomorphism;

namespace {

struct Expected {
  int index;
  long long monodromy;
  bool normal;
  std::int64_t level;
  std::optional<Verdict> verdict;  // unset: not applicable
};

const std::map<std::string, Expected>& expectations() {
  static const std::map<std::string, Expected> m = {
      {"g4_index8", {8, 16, false, 4, Verdict::Congruence}},
      {"g5_index10_bullets", {10, 50, false, 10, Verdict::Inconclusive}},
      {"g6_index3_gamma0_2", {3, 6, false, 2, Verdict::Congruence}},
      {"g6_index3_normal", {3, 3, true, 3, Verdict::Congruence}},
      {"psl2z_index11_noncongruence", {11, 19958400, false, 11, Verdict::NonCongruence}},
      {"psl2z_index12_principal3", {12, 12, true, 3, Verdict::Congruence}},
      {"psl2z_index12_quasi_regular", {12, 24, false, 6, Verdict::Congruence}},
      {"psl2z_index7_deg7_a", {7, 168, false, 7, Verdict::Congruence}},
      {"psl2z_index7_deg7_b", {7, 168, false, 7, Verdict::Congruence}},
      {"psl2z_index7_deg1_6_a", {7, 42, false, 6, Verdict::NonCongruence}},
      {"psl2z_index7_deg1_6_b", {7, 42, false, 6, Verdict::NonCongruence}},
      {"psl2z_index7_deg3_4", {7, 5040, false, 12, Verdict::NonCongruence}},
      {"psl2z_index7_deg2_5", {7, 5040, false, 10, Verdict::NonCongruence}},
      {"qgon_q3", {3, 3, true, 3, Verdict::Congruence}},
      {"qgon_q4", {4, 4, true, 4, Verdict::Congruence}},
      {"qgon_q5", {5, 5, true, 5, Verdict::NonCongruence}},
      {"qgon_q6", {6, 6, true, 6, Verdict::Congruence}},
      {"qgon_q7", {7, 7, true, 7, std::nullopt}},
      {"qgon_q8", {8, 8, true, 8, std::nullopt}},
      {"two_bullets", {2, 2, true, 2, Verdict::Congruence}},
  };
  return m;
}

}  // namespace

TEST_CASE("corpus analyses") {
  for (const auto& [name, e] : expectations()) {
    CAPTURE(name);
    const auto rep = analyze(corpus_symbol(name));
    CHECK(rep.invariants.index == e.index);
    CHECK(rep.monodromy_order == e.monodromy);
    CHECK(rep.core_index == e.monodromy);
    CHECK(rep.normal == e.normal);
    CHECK(rep.regular == e.normal);
    CHECK(rep.invariants.level == e.level);
    CHECK(rep.congruence.applicable == e.verdict.has_value());
    CHECK(rep.congruence.verdict == e.verdict);
    // A normal subgroup has a regular map: |Aut| = index.
    CHECK((rep.aut.order == e.index) == e.normal);
  }
}

TEST_CASE("automorphism groups") {
  const auto a8 = analyze(corpus_symbol("g4_index8"));
  CHECK(a8.aut.order == 4);
  CHECK(a8.aut.exponent == BigInt(2));
  CHECK(a8.aut.cyclic == false);
  CHECK(a8.quasi_regular);
  CHECK_FALSE(a8.regular);
  const auto a10 = analyze(corpus_symbol("g5_index10_bullets"));
  CHECK(a10.aut.order == 5);
  CHECK(a10.aut.cyclic == true);
  CHECK(analyze(corpus_symbol("g6_index3_normal")).aut.order == 3);
  CHECK(analyze(corpus_symbol("psl2z_index12_principal3")).aut.order == 12);
  CHECK(analyze(corpus_symbol("psl2z_index12_quasi_regular")).quasi_regular);
}

TEST_CASE("images of T and U for the index-11 subgroup") {
  const auto m = build_map(corpus_symbol("psl2z_index11_noncongruence"));
  const auto [fT, fU] = f_T_f_U(m);
  const auto eT = parse_barred("(1',2',3',4',4,7,3,6,2,5,1)", 7, 11);
  const auto eU = parse_barred("(1',5,2',6,3',7,4',4,3,2,1)", 7, 11);
  CHECK(tuple_isomorphism({fT, fU}, {eT, eU}).has_value());
  CHECK(fT.order() == 11);
  CHECK(fT.is_even());
  CHECK(fU.is_even());
  CHECK(PermGroup(11, {fT, fU}).order() == 19958400);
  CHECK_FALSE(hsu_congruence(fT, fU));
}

TEST_CASE("relation test against known subgroups of PSL(2,Z)") {
  for (const char* name : {"psl2z_index12_principal3", "psl2z_index7_deg7_a", "qgon_q3", "two_bullets"}) {
    const auto [a, b] = f_T_f_U(build_map(corpus_symbol(name)));
    CHECK_MESSAGE(hsu_congruence(a, b), name);
  }
  for (const char* name : {"psl2z_index7_deg1_6_a", "psl2z_index7_deg3_4", "psl2z_index7_deg2_5"}) {
    const auto [a, b] = f_T_f_U(build_map(corpus_symbol(name)));
    CHECK_MESSAGE(!hsu_congruence(a, b), name);
  }
  CHECK_THROWS_AS(f_T_f_U(build_map(corpus_symbol("qgon_q4"))), DomainError);
}

TEST_CASE("matrix oracle") {
  const auto m11 = build_map(corpus_symbol("psl2z_index11_noncongruence"));
  const auto r = congruence_oracle(m11);
  CHECK(r.verdict == Verdict::NonCongruence);
  CHECK(r.image_size == 660);
  CHECK(r.modulus == RingElement(3, 11));
  const auto g0 = congruence_oracle(build_map(corpus_symbol("g6_index3_gamma0_2")));
  CHECK(g0.verdict == Verdict::Congruence);
  CHECK(g0.modulus == RingElement::parse(6, "2L"));
  // PSL(2, Z/3) has order 12.
  CHECK(congruence_image_size(RingElement(3, 3), 1000) == 12u);
  CHECK(congruence_image_size(RingElement(3, 7), 1000) == 168u);
  CHECK_FALSE(congruence_image_size(RingElement(3, 11), 100).has_value());
  OracleOptions tiny;
  tiny.max_size = 100;
  CHECK(congruence_oracle(m11, tiny).verdict == Verdict::Inconclusive);
  // The verdict does not depend on the base dart.
  for (int base = 0; base < m11.omega; ++base) {
    OracleOptions o;
    o.base_dart = base;
    CHECK(congruence_oracle(m11, o).verdict == Verdict::NonCongruence);
  }
}

TEST_CASE("congruence methods") {
  const auto h = corpus_symbol("psl2z_index11_noncongruence");
  AnalysisOptions o;
  o.congruence = CongruenceMethod::Hsu;
  auto rep = analyze(h, o);
  CHECK(rep.congruence.method == "hsu");
  CHECK(rep.congruence.verdict == Verdict::NonCongruence);
  CHECK_FALSE(rep.congruence.oracle.has_value());
  o.congruence = CongruenceMethod::Off;
  rep = analyze(h, o);
  CHECK(rep.congruence.method == "off");
  CHECK_FALSE(rep.congruence.verdict.has_value());
  o.congruence = CongruenceMethod::Both;
  o.max_oracle_size = 50;
  rep = analyze(h, o);
  // The relation test decides when the oracle gives up.
  CHECK(rep.congruence.verdict == Verdict::NonCongruence);
  CHECK(rep.congruence.oracle->verdict == Verdict::Inconclusive);
  // Outside q = 3 the relation test does not apply.
  o = AnalysisOptions{};
  o.congruence = CongruenceMethod::Hsu;
  rep = analyze(corpus_symbol("g4_index8"), o);
  CHECK(rep.congruence.verdict == Verdict::Congruence);
  CHECK(rep.congruence.oracle.has_value());
}

TEST_CASE("invalid symbols are rejected") {
  auto h = corpus_symbol("g6_index3_normal");
  h.labels.back() = PairingLabel::er(4);
  try {
    analyze(h);
    FAIL("expected InvalidSymbol");
  } catch (const InvalidSymbol& e) {
    CHECK(e.code() == "ErNotDivisor");
  }
}

TEST_CASE("JSON reports") {
  const auto h = corpus_symbol("psl2z_index11_noncongruence");
  const Json j = report_to_json(analyze(h));
  CHECK(j["q"] == 3);
  CHECK(j["index"] == 11);
  CHECK(j["monodromy_order"] == "19958400");
  CHECK(j["normal"] == false);
  CHECK(j["invariants"]["level"] == 11);
  CHECK(j["congruence"]["verdict"] == false);
  CHECK(j["congruence"]["method"] == "both");
  CHECK(j["congruence"]["agreement"] == true);
  CHECK(j["congruence"]["oracle"]["image_size"] == 660);
  CHECK(j["generators"].size() == 5);
  CHECK(report_to_json(analyze(h)).dump() == j.dump());

  const Json n = report_to_json(analyze(corpus_symbol("g6_index3_normal")), {true});
  CHECK(n["normal"] == true);
  CHECK(n["index"] == 3);
  CHECK(n["aut"]["order"] == 3);
  CHECK(n["dessin"]["sigma1"] == "(1,2,3)");
  CHECK(n["generators"][3]["kind"] == "e2");
  CHECK(n["generators"][3]["matrix"] == Json::parse(R"([["L","-2"],["2","-L"]])"));
  CHECK(n["congruence"]["modulus"] == "3L");

  const Json q7 = report_to_json(analyze(corpus_symbol("qgon_q7")));
  CHECK(q7["congruence"]["applicable"] == false);
  CHECK(q7["congruence"]["verdict"].is_null());
}
