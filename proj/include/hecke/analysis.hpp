#pragma once

// Group-theoretic verdicts on a subgroup given by its combinatorial map:
// normality, automorphisms, level and congruence.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hecke/hfs.hpp"
#include "hecke/map_builder.hpp"
#include "hecke/perm_group.hpp"

namespace hecke {

/// <r1, r2>
PermGroup monodromy(const CombinatorialMap& map);
bool is_normal(const CombinatorialMap& map);
/// Index of the largest normal subgroup of G_q contained in X, i.e. |<r1, r2>|.
BigInt core_index(const CombinatorialMap& map);
/// Centralizer of the monodromy group in the symmetric group on the darts.
PermGroup automorphism_group(const CombinatorialMap& map);
StructureSummary automorphisms(const CombinatorialMap& map, std::uint64_t bound = 1000000);
bool is_quasi_regular(const CombinatorialMap& map);
/// Automorphism group transitive on darts.
bool is_regular(const CombinatorialMap& map);
std::int64_t level(const CombinatorialMap& map);

/// (f(T), f(U)) = (r0, r1 r0^-1 r1^-1); q must be 3.
std::pair<Permutation, Permutation> f_T_f_U(const CombinatorialMap& map);

/// Hsu's relations for the images A = f(T), B = f(U) of a subgroup of
/// PSL(2,Z); true iff the subgroup is congruence.
bool hsu_congruence(const Permutation& fT, const Permutation& fU);

enum class Verdict { Congruence, NonCongruence, Inconclusive };
std::string to_string(Verdict v);

struct OracleOptions {
  std::uint64_t max_size = 1000000;
  int base_dart = 0;
};

struct OracleResult {
  Verdict verdict = Verdict::Inconclusive;
  RingElement modulus = RingElement(3);
  /// |<S, T>| in PSL(2, Z[lambda]/(modulus)); 0 if the cap was hit
  std::uint64_t image_size = 0;
  std::uint64_t orbit_size = 0;
  std::string note;
};

/// Compares the orbit of (base dart, I) under {(r1, S), (r0, T)} with the
/// image of G_q modulo n*lambda (q = 3, 4, 6) or 2n (q = 5), n = level.
OracleResult congruence_oracle(const CombinatorialMap& map, const OracleOptions& opts = {});

/// Size of the image of G_q in PSL(2, Z[lambda]/(modulus)), or nullopt past max_size.
std::optional<std::uint64_t> congruence_image_size(const RingElement& modulus, std::uint64_t max_size);

enum class CongruenceMethod { Hsu, Oracle, Both, Off };

struct AnalysisOptions {
  CongruenceMethod congruence = CongruenceMethod::Both;
  std::uint64_t max_oracle_size = 1000000;
  std::uint64_t face_budget = 0;
  std::uint64_t structure_bound = 1000000;
};

struct CongruenceReport {
  bool applicable = false;
  std::optional<Verdict> verdict;  // unset when not applicable or switched off
  std::string method;              // "hsu", "oracle", "both", "off", "n/a"
  std::optional<RingElement> modulus;
  std::optional<bool> hsu;
  std::optional<OracleResult> oracle;
};

struct AnalysisReport {
  HeckeFareySymbol symbol;
  CombinatorialMap map;
  InvariantReport invariants;
  std::vector<Generator> generators;
  BigInt monodromy_order;
  BigInt core_index;
  bool normal = false;
  StructureSummary aut;
  std::string normalizer_note;
  bool regular = false;
  bool quasi_regular = false;
  CongruenceReport congruence;
};

/// Full pipeline. Throws InvalidSymbol for symbols that fail validation and
/// InternalError if the Hsu test and the oracle disagree.
AnalysisReport analyze(const HeckeFareySymbol& hfs, const AnalysisOptions& opts = {});

}  // namespace hecke
