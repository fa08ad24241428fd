#pragma once

#include <string>
#include <vector>

#include "hecke/hfs.hpp"
#include "hecke/map_builder.hpp"

namespace hecke {

enum class ViolationCode {
  LabelCountMismatch,
  BadEndpoints,
  NoZeroCusp,
  ZeroDenominatorCusp,
  CuspsNotIncreasing,
  UnpairedFreeLabel,
  ErNotDivisor,
  ErOutOfRange,
  AdjacencyDeterminant,
  ErDeterminantOne,
  InvalidErAdjacency,
  DecompositionFailed,
  FaceBudgetExceeded,
  InvalidInvariants,
};

struct Violation {
  ViolationCode code;
  /// Free label value, e_r order, or side/cusp index, depending on the code.
  int value = -1;
  std::string detail;

  /// "UnpairedFreeLabel(2)", "ErNotDivisor", ...
  std::string to_string() const;
  friend bool operator==(const Violation& a, const Violation& b) {
    return a.code == b.code && a.value == b.value;
  }
};

std::string code_name(ViolationCode code);

/// Empty iff the symbol is structurally valid and its special polygon decomposes.
/// Label problems are reported on their own: later checks assume sane labels.
std::vector<Violation> validate_hfs(const HeckeFareySymbol& hfs, const DecomposeOptions& opts = {});

}  // namespace hecke
