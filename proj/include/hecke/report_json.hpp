#pragma once

#include "json.hpp"

#include "hecke/analysis.hpp"
#include "hecke/hfs.hpp"
#include "hecke/map_builder.hpp"

namespace hecke {

using Json = nlohmann::ordered_json;

/// {q, cusps: [[num, den], ...], labels: [...]} with ring elements as L-polynomials.
Json hfs_to_json(const HeckeFareySymbol& hfs);
/// Throws ParseError on malformed input.
HeckeFareySymbol hfs_from_json(const Json& j);

/// {omega, r1, r2, r0, faces, edges}
Json map_to_json(const CombinatorialMap& map);

struct ReportJsonOptions {
  bool include_dessin = false;
};

Json report_to_json(const AnalysisReport& rep, const ReportJsonOptions& opts = {});

}  // namespace hecke
