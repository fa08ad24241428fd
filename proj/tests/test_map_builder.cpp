#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "hecke/errors.hpp"
#include "hecke/map_builder.hpp"
#include "support/corpus.hpp"
#include "support/perm_iso.hpp"

using namespace hecke;
using hecke::testing::corpus_files;
using hecke::testing::corpus_symbol;
using hecke::testing::parse_barred;
using hecke::testing::read_text;
using hecke::testing::tuple_isomorphism;

namespace {

CombinatorialMap corpus_map(const std::string& name) { return build_map(corpus_symbol(name)); }

bool same_map(const CombinatorialMap& m, const Permutation& r1, const Permutation& r2) {
  return tuple_isomorphism({m.r1, m.r2}, {r1, r2}).has_value();
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("index-8 map of G_4 matches the hand reading") {
  const auto m = corpus_map("g4_index8");
  CHECK(m.omega == 8);
  const auto r1 = parse_barred("(1,1')(2,2')(3,3')(4,4')", 4, 8);
  const auto r2 = parse_barred("(1,2,1',4')(4,3,2',3')", 4, 8);
  CHECK(same_map(m, r1, r2));
  // r0 = r2^-1 r1^-1 with the stated cycles.
  CHECK(r2.inverse() * r1.inverse() == parse_barred("(2,3,2',1)(4',3',4,1')", 4, 8));
  CHECK(m.r0 == m.r2.inverse() * m.r1.inverse());
  CHECK(m.faces.size() == 2);
  for (const auto& f : m.faces) {
    CHECK(f.kind == FaceKind::QGon);
    CHECK(f.darts.size() == 4);
    CHECK(f.vertices.size() == 4);
  }
  CHECK(m.edges.size() == 4);
  for (const auto& e : m.edges) CHECK_FALSE(e.free);
}

TEST_CASE("level-3 principal congruence map matches the hand reading") {
  const auto m = corpus_map("psl2z_index12_principal3");
  const auto r2 = parse_barred("(1,2,4')(4,6,5')(5,3',1')(6',2',3)", 6, 12);
  const auto r1 = parse_barred("(1,1')(2,2')(3,3')(4,4')(5,5')(6,6')", 6, 12);
  CHECK(same_map(m, r1, r2));
  CHECK(maps_isomorphic(m, make_map(3, r1, r2)));
}

TEST_CASE("index-11 map of PSL(2,Z) matches the hand reading") {
  const auto m = corpus_map("psl2z_index11_noncongruence");
  const auto r1 = parse_barred("(1,1')(2,2')(3,3')(4,4')", 7, 11);
  const auto r2 = parse_barred("(1')(1,5,2')(2,6,3')(3,7,4')(4)", 7, 11);
  CHECK(same_map(m, r1, r2));
}

TEST_CASE("pentagon with five 1-gons") {
  const auto m = corpus_map("g5_index10_bullets");
  CHECK(m.r1.cycle_lengths() == std::vector<int>(5, 2));
  CHECK(sorted(m.r2.cycle_lengths()) == std::vector<int>{1, 1, 1, 1, 1, 5});
  const auto r1 = parse_barred("(1,1')(2,2')(3,3')(4,4')(5,5')", 5, 10);
  const auto r2 = parse_barred("(1,2,3,4,5)", 5, 10);
  CHECK(same_map(m, r1, r2));
  int bullets = 0;
  for (const auto& f : m.faces) bullets += f.kind == FaceKind::Bullet;
  CHECK(bullets == 5);
}

TEST_CASE("a single rotation face") {
  const auto m = corpus_map("g6_index3_normal");
  REQUIRE(m.faces.size() == 1);
  CHECK(m.faces[0].kind == FaceKind::Er);
  CHECK(m.faces[0].r == 2);
  CHECK(m.faces[0].darts.size() == 3);
  CHECK(m.r1 == Permutation::identity(3));
  CHECK(same_map(m, Permutation::identity(3), Permutation::parse("(1,2,3)")));
  const auto inv = invariants(m);
  CHECK(inv.tau2 == 3);
  CHECK(inv.v.at(2) == 1);
  CHECK(inv.v.at(3) == 0);
  CHECK(inv.v.at(6) == 0);
  CHECK(inv.genus == 0);
}

TEST_CASE("two 1-gons on one edge, and the whole group") {
  const auto m = corpus_map("two_bullets");
  CHECK(m.omega == 2);
  CHECK(m.r1 == Permutation::parse("(1,2)"));
  CHECK(m.r2 == Permutation::identity(2));
  auto h = corpus_symbol("two_bullets");
  h.labels[0] = PairingLabel::circle();
  const auto whole = build_map(h);
  CHECK(whole.omega == 1);
  CHECK(invariants(whole).tau2 == 1);
  CHECK(invariants(whole).v.at(3) == 1);
}

TEST_CASE("invariants of the index-7 maps") {
  const auto deg7 = invariants(corpus_map("psl2z_index7_deg7_a"));
  CHECK(deg7.index == 7);
  CHECK(deg7.tau2 == 3);
  CHECK(deg7.v.at(3) == 1);
  CHECK(deg7.v_inf == 1);
  CHECK(deg7.vertex_degrees == std::vector<int>{7});
  CHECK(deg7.genus == 0);
  CHECK(deg7.level == 7);
  CHECK(sorted(invariants(corpus_map("psl2z_index7_deg1_6_a")).vertex_degrees) == std::vector<int>{1, 6});
  CHECK(sorted(invariants(corpus_map("psl2z_index7_deg3_4")).vertex_degrees) == std::vector<int>{3, 4});
  CHECK(sorted(invariants(corpus_map("psl2z_index7_deg2_5")).vertex_degrees) == std::vector<int>{2, 5});
}

TEST_CASE("index-8 invariants") {
  const auto inv = invariants(corpus_map("g4_index8"));
  CHECK(inv.genus == 1);
  CHECK(inv.v_inf == 2);
  CHECK(inv.edges == 4);
  CHECK(inv.faces == 2);
  CHECK(inv.tau2 == 0);
  CHECK(inv.quasi_regular);
  CHECK(inv.level == 4);
}

TEST_CASE("corpus maps are consistent") {
  for (const auto& f : corpus_files()) {
    CAPTURE(f.string());
    const auto h = parse_hfs(read_text(f));
    const auto m = build_map(h);
    CHECK((m.r1 * m.r1).is_identity());
    CHECK(m.r2.pow(m.q).is_identity());
    CHECK((m.r0 * m.r1 * m.r2).is_identity());
    int face_total = 0;
    for (const auto& face : m.faces) face_total += static_cast<int>(face.darts.size());
    CHECK(face_total == m.omega);
    const auto inv = invariants(m);
    // Riemann-Hurwitz for the triple (r0, r1, r2).
    const int chi = static_cast<int>(m.r0.cycles().size() + m.r1.cycles().size() + m.r2.cycles().size()) - m.omega;
    CHECK(chi == 2 - 2 * inv.genus);
    // Cusp classes of the polygon are the vertices of the map.
    CHECK(static_cast<int>(vertex_classes_by_pairings(h).size()) == inv.v_inf);
    const auto [s0, s1] = dessin(m);
    CHECK(s0 == m.r1);
    CHECK(s1 == m.r2);
  }
}

TEST_CASE("vertex classes of the level-3 principal congruence subgroup") {
  const auto classes = vertex_classes_by_pairings(corpus_symbol("psl2z_index12_principal3"));
  CHECK(classes.size() == 4);
  // -inf and inf are one vertex.
  bool joined = false;
  for (const auto& c : classes)
    joined = joined || (std::count(c.begin(), c.end(), 0) && std::count(c.begin(), c.end(), 6));
  CHECK(joined);
}

TEST_CASE("canonical relabeling") {
  const auto m = corpus_map("psl2z_index11_noncongruence");
  for (int base = 0; base < m.omega; ++base) {
    const auto c = canonical_relabel(m, base);
    CHECK(maps_isomorphic(c, m));
    CHECK(same_map(c, m.r1, m.r2));
    CHECK(canonical_relabel(c, 0).r1 == c.r1);
  }
  CHECK_FALSE(maps_isomorphic(corpus_map("psl2z_index7_deg7_a"), corpus_map("psl2z_index7_deg1_6_a")));
  CHECK(maps_isomorphic(corpus_map("psl2z_index7_deg7_a"), corpus_map("psl2z_index7_deg7_a")));
}

TEST_CASE("maps from bare permutations") {
  const auto m = make_map(4, Permutation::parse("(1,2)(3,4)"), Permutation::parse("(1,3)(2,4)"));
  CHECK(m.faces.size() == 2);
  CHECK(m.faces[0].kind == FaceKind::Er);
  CHECK(m.faces[0].r == 2);
  CHECK(m.edges.size() == 2);
  CHECK_THROWS_AS(build_map(corpus_symbol("g4_index8"), DecomposeOptions{1}), InvalidSymbol);
  CHECK_THROWS_AS(make_map(3, Permutation::parse("(1,2)"), Permutation::parse("(1,2,3)")), DomainError);
}
