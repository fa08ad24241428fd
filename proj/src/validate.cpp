#include "hecke/validate.hpp"

#include <map>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

using Kind = PairingLabel::Kind;

const std::map<std::string, ViolationCode>& codes_by_name() {
  static const std::map<std::string, ViolationCode> m = {
      {"LabelCountMismatch", ViolationCode::LabelCountMismatch},
      {"BadEndpoints", ViolationCode::BadEndpoints},
      {"NoZeroCusp", ViolationCode::NoZeroCusp},
      {"ZeroDenominatorCusp", ViolationCode::ZeroDenominatorCusp},
      {"CuspsNotIncreasing", ViolationCode::CuspsNotIncreasing},
      {"UnpairedFreeLabel", ViolationCode::UnpairedFreeLabel},
      {"ErNotDivisor", ViolationCode::ErNotDivisor},
      {"ErOutOfRange", ViolationCode::ErOutOfRange},
      {"AdjacencyDeterminant", ViolationCode::AdjacencyDeterminant},
      {"ErDeterminantOne", ViolationCode::ErDeterminantOne},
      {"InvalidErAdjacency", ViolationCode::InvalidErAdjacency},
      {"DecompositionFailed", ViolationCode::DecompositionFailed},
      {"FaceBudgetExceeded", ViolationCode::FaceBudgetExceeded},
      {"InvalidInvariants", ViolationCode::InvalidInvariants},
  };
  return m;
}

}  // namespace

std::string code_name(ViolationCode code) {
  for (const auto& [name, c] : codes_by_name())
    if (c == code) return name;
  return "Unknown";
}

std::string Violation::to_string() const {
  if (code == ViolationCode::UnpairedFreeLabel) return code_name(code) + "(" + std::to_string(value) + ")";
  return code_name(code);
}

std::vector<Violation> validate_hfs(const HeckeFareySymbol& hfs, const DecomposeOptions& opts) {
  std::vector<Violation> out;
  const int q = hfs.q;
  if (hfs.labels.size() + 1 != hfs.cusps.size() || hfs.cusps.size() < 3) {
    out.push_back({ViolationCode::LabelCountMismatch, -1,
                   std::to_string(hfs.cusps.size()) + " cusps but " +
                       std::to_string(hfs.labels.size()) + " labels"});
    return out;
  }
  for (const auto& c : hfs.cusps)
    if (c.q() != q) {
      out.push_back({ViolationCode::BadEndpoints, -1, "cusp over a different ring"});
      return out;
    }
  if (!(hfs.cusps.front() == Cusp::neg_infinity(q)) || !(hfs.cusps.back() == Cusp::infinity(q))) {
    out.push_back({ViolationCode::BadEndpoints, -1, "cusps must run from -1/0 to 1/0"});
    return out;
  }

  // labels
  std::map<int, int> free_count;
  for (const auto& l : hfs.labels) {
    if (l.kind == Kind::Free) ++free_count[l.value];
    if (l.kind == Kind::Er) {
      if (l.value <= 1 || l.value >= q)
        out.push_back({ViolationCode::ErOutOfRange, l.value, "e" + std::to_string(l.value)});
      else if (q % l.value != 0)
        out.push_back({ViolationCode::ErNotDivisor, l.value,
                       std::to_string(l.value) + " does not divide " + std::to_string(q)});
    }
  }
  for (const auto& [a, n] : free_count)
    if (n != 2)
      out.push_back({ViolationCode::UnpairedFreeLabel, a,
                     "label " + std::to_string(a) + " occurs " + std::to_string(n) + " times"});
  if (!out.empty()) return out;

  // cusps
  const std::size_t last = hfs.cusps.size() - 1;
  bool has_zero = false;
  for (std::size_t i = 1; i < last; ++i) {
    const Cusp& c = hfs.cusps[i];
    if (c.den.is_zero())
      out.push_back({ViolationCode::ZeroDenominatorCusp, static_cast<int>(i), c.to_string()});
    else if (c.num.is_zero())
      has_zero = true;
  }
  if (!has_zero) out.push_back({ViolationCode::NoZeroCusp, -1, "no cusp equals 0"});
  if (!out.empty()) return out;
  for (std::size_t i = 0; i < last; ++i)
    if (compare_cusps(hfs.cusps[i], hfs.cusps[i + 1]) >= 0)
      out.push_back({ViolationCode::CuspsNotIncreasing, static_cast<int>(i),
                     hfs.cusps[i].to_string() + " >= " + hfs.cusps[i + 1].to_string()});
  if (!out.empty()) return out;

  // adjacencies
  for (std::size_t i = 0; i < hfs.labels.size(); ++i) {
    const RingElement det = cross(hfs.cusps[i], hfs.cusps[i + 1]);
    const std::string where = "(" + hfs.cusps[i].to_string() + ", " + hfs.cusps[i + 1].to_string() + ")";
    if (hfs.labels[i].kind == Kind::Er) {
      if (det.is_one())
        out.push_back({ViolationCode::ErDeterminantOne, static_cast<int>(i), where});
    } else if (!det.is_one()) {
      out.push_back({ViolationCode::AdjacencyDeterminant, static_cast<int>(i),
                     where + " has determinant " + det.to_string()});
    }
  }
  if (!out.empty()) return out;

  for (std::size_t i = 0; i < hfs.labels.size(); ++i) {
    if (hfs.labels[i].kind != Kind::Er) continue;
    try {
      reconstruct_er_polygon(hfs.cusps[i], hfs.cusps[i + 1], hfs.labels[i].value, q);
    } catch (const InvalidSymbol& e) {
      out.push_back({ViolationCode::InvalidErAdjacency, static_cast<int>(i), e.what()});
    }
  }
  if (!out.empty()) return out;

  try {
    const CombinatorialMap m = build_map(hfs, opts);
    invariants(m);
  } catch (const InvalidSymbol& e) {
    auto it = codes_by_name().find(e.code());
    out.push_back({it == codes_by_name().end() ? ViolationCode::DecompositionFailed : it->second, -1,
                   e.what()});
  }
  return out;
}

}  // namespace hecke
