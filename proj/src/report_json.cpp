#include "hecke/report_json.hpp"

#include "hecke/errors.hpp"

namespace hecke {

namespace {

std::string kind_name(const PairingLabel& l) {
  switch (l.kind) {
    case PairingLabel::Kind::Circle:
      return "circle";
    case PairingLabel::Kind::Bullet:
      return "bullet";
    case PairingLabel::Kind::Free:
      return "free";
    case PairingLabel::Kind::Er:
      return "e" + std::to_string(l.value);
  }
  return "?";
}

std::string face_kind(FaceKind k) {
  switch (k) {
    case FaceKind::QGon:
      return "qgon";
    case FaceKind::Bullet:
      return "bullet";
    case FaceKind::Er:
      return "er";
  }
  return "?";
}

Json matrix_json(const PSL2Element& g) {
  return Json::array({Json::array({g.a().to_string(), g.b().to_string()}),
                      Json::array({g.c().to_string(), g.d().to_string()})});
}

}  // namespace

Json hfs_to_json(const HeckeFareySymbol& hfs) {
  Json cusps = Json::array();
  for (const auto& c : hfs.cusps) cusps.push_back(Json::array({c.num.to_string(), c.den.to_string()}));
  Json labels = Json::array();
  for (const auto& l : hfs.labels) labels.push_back(l.to_string());
  return Json{{"q", hfs.q}, {"cusps", cusps}, {"labels", labels}};
}

HeckeFareySymbol hfs_from_json(const Json& j) {
  auto bad = [](const std::string& msg) { return ParseError(msg, 1, 1); };
  if (!j.is_object() || !j.contains("q") || !j.contains("cusps") || !j.contains("labels"))
    throw bad("symbol JSON needs q, cusps and labels");
  if (!j["q"].is_number_integer() || j["q"].get<int>() < 3) throw bad("q must be an integer >= 3");
  HeckeFareySymbol h;
  h.q = j["q"].get<int>();
  for (const auto& c : j["cusps"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw bad("each cusp is a [num, den] pair of strings");
    h.cusps.push_back({RingElement::parse(h.q, c[0].get<std::string>()),
                       RingElement::parse(h.q, c[1].get<std::string>())});
  }
  for (const auto& l : j["labels"]) {
    if (!l.is_string()) throw bad("labels are strings");
    h.labels.push_back(PairingLabel::parse(l.get<std::string>()));
  }
  return h;
}

Json map_to_json(const CombinatorialMap& map) {
  Json faces = Json::array();
  for (const auto& f : map.faces) {
    Json darts = Json::array();
    for (int d : f.darts) darts.push_back(d + 1);
    Json fj{{"kind", face_kind(f.kind)}, {"size", f.darts.size()}, {"darts", darts}};
    if (f.kind == FaceKind::Er) fj["r"] = f.r;
    if (!f.vertices.empty()) {
      Json vs = Json::array();
      for (const auto& v : f.vertices) vs.push_back(v.to_string());
      fj["cusps"] = vs;
    }
    faces.push_back(fj);
  }
  Json edges = Json::array();
  for (const auto& e : map.edges) {
    Json darts = Json::array();
    for (int d : e.darts) darts.push_back(d + 1);
    edges.push_back(Json{{"free", e.free}, {"darts", darts}});
  }
  return Json{{"omega", map.omega},       {"r1", map.r1.to_string()}, {"r2", map.r2.to_string()},
              {"r0", map.r0.to_string()}, {"faces", faces},           {"edges", edges}};
}

Json report_to_json(const AnalysisReport& rep, const ReportJsonOptions& opts) {
  const auto& inv = rep.invariants;
  Json v = Json::object();
  for (const auto& [r, n] : inv.v) v[std::to_string(r)] = n;
  Json invj{{"tau2", inv.tau2},
            {"v", v},
            {"vertices", inv.v_inf},
            {"edges", inv.edges},
            {"faces", inv.faces},
            {"degrees", inv.vertex_degrees},
            {"genus", inv.genus},
            {"level", inv.level}};
  Json gens = Json::array();
  for (const auto& g : rep.generators) gens.push_back(Json{{"kind", kind_name(g.label)}, {"matrix", matrix_json(g.matrix)}});

  Json aut{{"order", rep.aut.order.convert_to<long long>()}};
  aut["exponent"] = rep.aut.exponent ? Json(rep.aut.exponent->convert_to<long long>()) : Json(nullptr);
  aut["abelian"] = rep.aut.abelian ? Json(*rep.aut.abelian) : Json(nullptr);
  aut["cyclic"] = rep.aut.cyclic ? Json(*rep.aut.cyclic) : Json(nullptr);

  const auto& c = rep.congruence;
  Json cj{{"applicable", c.applicable}};
  if (!c.verdict)
    cj["verdict"] = nullptr;
  else if (*c.verdict == Verdict::Inconclusive)
    cj["verdict"] = "inconclusive";
  else
    cj["verdict"] = *c.verdict == Verdict::Congruence;
  cj["method"] = c.method;
  cj["modulus"] = c.modulus ? Json(c.modulus->to_string()) : Json(nullptr);
  if (c.hsu) cj["hsu"] = *c.hsu;
  if (c.oracle) {
    Json oj{{"verdict", to_string(c.oracle->verdict)},
            {"image_size", c.oracle->image_size},
            {"orbit_size", c.oracle->orbit_size}};
    if (!c.oracle->note.empty()) oj["note"] = c.oracle->note;
    cj["oracle"] = oj;
  }
  if (c.hsu && c.oracle && c.oracle->verdict != Verdict::Inconclusive)
    cj["agreement"] = *c.hsu == (c.oracle->verdict == Verdict::Congruence);

  Json out{{"q", rep.symbol.q},
           {"index", inv.index},
           {"darts", rep.map.omega},
           {"r1", rep.map.r1.to_string()},
           {"r2", rep.map.r2.to_string()},
           {"r0", rep.map.r0.to_string()},
           {"invariants", invj},
           {"generators", gens},
           {"monodromy_order", rep.monodromy_order.str()},
           {"core_index", rep.core_index.str()},
           {"normal", rep.normal},
           {"aut", aut},
           {"normalizer_note", rep.normalizer_note},
           {"quasi_regular", rep.quasi_regular},
           {"regular", rep.regular},
           {"congruence", cj}};
  if (opts.include_dessin)
    out["dessin"] = Json{{"sigma0", rep.map.r1.to_string()}, {"sigma1", rep.map.r2.to_string()}};
  return out;
}

}  // namespace hecke
