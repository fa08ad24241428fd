// hfs: command-line front end for the Hecke-Farey symbol library.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hecke/analysis.hpp"
#include "hecke/errors.hpp"
#include "hecke/report_json.hpp"
#include "hecke/validate.hpp"

using namespace hecke;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kResource = 2, kIo = 3, kInternal = 4 };

struct RunConfig {
  std::vector<std::string> paths;
  bool json = false;
  std::string congruence = "both";
  std::uint64_t max_oracle_size = 1000000;
  std::uint64_t face_budget = 0;
  bool emit_generators = false;
  bool emit_dessin = false;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NamedSymbol {
  std::string name;
  HeckeFareySymbol symbol;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in || fs::is_directory(path)) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& text) {
  auto it = std::find_if(text.begin(), text.end(), [](unsigned char c) { return !std::isspace(c); });
  return it != text.end() && (*it == '{' || *it == '[');
}

std::vector<NamedSymbol> load(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<HeckeFareySymbol> symbols;
  if (looks_like_json(text)) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(e.what(), 1, 1);
    }
    if (j.is_array()) {
      for (const auto& x : j) symbols.push_back(hfs_from_json(x));
    } else {
      symbols.push_back(hfs_from_json(j));
    }
  } else {
    symbols = parse_hfs_records(text);
  }
  std::vector<NamedSymbol> out;
  for (std::size_t i = 0; i < symbols.size(); ++i)
    out.push_back({symbols.size() == 1 ? path : path + "#" + std::to_string(i + 1), symbols[i]});
  return out;
}

AnalysisOptions analysis_options(const RunConfig& cfg) {
  AnalysisOptions o;
  static const std::map<std::string, CongruenceMethod> methods = {
      {"hsu", CongruenceMethod::Hsu},
      {"oracle", CongruenceMethod::Oracle},
      {"both", CongruenceMethod::Both},
      {"off", CongruenceMethod::Off}};
  o.congruence = methods.at(cfg.congruence);
  o.max_oracle_size = cfg.max_oracle_size;
  o.face_budget = cfg.face_budget;
  return o;
}

void emit(const Json& docs, bool as_array) {
  if (as_array)
    std::cout << docs.dump(2) << "\n";
  else
    std::cout << docs.front().dump(2) << "\n";
}

std::string verdict_text(const CongruenceReport& c) {
  if (!c.applicable) return "n/a";
  if (!c.verdict) return "off";
  return to_string(*c.verdict);
}

void print_report(std::ostream& os, const std::string& name, const AnalysisReport& rep, const RunConfig& cfg) {
  const auto& inv = rep.invariants;
  auto row = [&](const std::string& k, const std::string& v) {
    os << "  " << std::left << std::setw(16) << k << v << "\n";
  };
  os << name << "\n";
  std::string sym = serialize_hfs(rep.symbol);
  std::replace(sym.begin(), sym.end(), '\n', ' ');
  row("symbol", sym.substr(0, sym.size() - 1));
  row("index", std::to_string(inv.index));
  row("r1", rep.map.r1.to_string());
  row("r2", rep.map.r2.to_string());
  row("r0", rep.map.r0.to_string());
  std::string v;
  for (const auto& [r, n] : inv.v) v += (v.empty() ? "" : " ") + ("v" + std::to_string(r) + "=" + std::to_string(n));
  row("elliptic", "tau2=" + std::to_string(inv.tau2) + " " + v);
  std::string degs;
  for (int d : inv.vertex_degrees) degs += (degs.empty() ? "" : ",") + std::to_string(d);
  row("vertices", std::to_string(inv.v_inf) + " (degrees " + degs + ")");
  row("edges/faces", std::to_string(inv.edges) + " / " + std::to_string(inv.faces));
  row("genus", std::to_string(inv.genus));
  row("level", std::to_string(inv.level));
  row("monodromy", rep.monodromy_order.str());
  row("normal", rep.normal ? "yes" : "no");
  std::string aut = "order " + rep.aut.order.str();
  if (rep.aut.exponent) aut += ", exponent " + rep.aut.exponent->str();
  if (rep.aut.abelian) aut += *rep.aut.abelian ? ", abelian" : ", non-abelian";
  if (rep.aut.cyclic) aut += *rep.aut.cyclic ? ", cyclic" : ", not cyclic";
  row("automorphisms", aut);
  row("regular", rep.regular ? "yes" : "no");
  row("quasi-regular", rep.quasi_regular ? "yes" : "no");
  const auto& c = rep.congruence;
  std::string cong = verdict_text(c);
  if (c.applicable && c.verdict) {
    cong += " (" + c.method;
    if (c.modulus) cong += ", modulus " + c.modulus->to_string();
    if (c.hsu && c.oracle && c.oracle->verdict != Verdict::Inconclusive) cong += ", hsu and oracle agree";
    if (c.oracle && !c.oracle->note.empty()) cong += ", " + c.oracle->note;
    cong += ")";
  }
  row("congruence", cong);
  if (cfg.emit_generators)
    for (const auto& g : rep.generators) row("generator " + g.label.to_string(), g.matrix.to_string());
  if (cfg.emit_dessin) {
    row("sigma0", rep.map.r1.to_string());
    row("sigma1", rep.map.r2.to_string());
  }
}

// Runs fn on every symbol of every path, mapping exceptions to exit codes.
template <class Fn>
int for_each_symbol(const std::vector<std::string>& paths, Fn fn) {
  int worst = kOk;
  auto note = [&](int code) { worst = std::max(worst, code); };
  for (const auto& path : paths) {
    try {
      for (const auto& ns : load(path)) {
        try {
          note(fn(ns));
        } catch (const InvalidSymbol& e) {
          std::cerr << ns.name << ": invalid symbol: " << e.what() << "\n";
          note(kInvalid);
        } catch (const ResourceLimit& e) {
          std::cerr << ns.name << ": resource limit: " << e.what() << "\n";
          note(kResource);
        } catch (const DomainError& e) {
          std::cerr << ns.name << ": " << e.what() << "\n";
          note(kInvalid);
        }
      }
    } catch (const IoError& e) {
      std::cerr << e.what() << "\n";
      note(kIo);
    } catch (const ParseError& e) {
      std::cerr << path << ": " << e.what() << "\n";
      note(kInvalid);
    }
  }
  return worst;
}

int cmd_validate(const RunConfig& cfg) {
  Json docs = Json::array();
  DecomposeOptions dopts;
  dopts.face_budget = cfg.face_budget;
  int rc = for_each_symbol(cfg.paths, [&](const NamedSymbol& ns) {
    const auto violations = validate_hfs(ns.symbol, dopts);
    if (cfg.json) {
      Json vs = Json::array();
      for (const auto& v : violations) {
        Json vj{{"code", code_name(v.code)}};
        if (v.code == ViolationCode::UnpairedFreeLabel || v.code == ViolationCode::ErNotDivisor ||
            v.code == ViolationCode::ErOutOfRange)
          vj["value"] = v.value;
        vj["detail"] = v.detail;
        vs.push_back(vj);
      }
      docs.push_back(Json{{"file", ns.name}, {"valid", violations.empty()}, {"violations", vs}});
    } else {
      std::cout << ns.name << ": " << (violations.empty() ? "valid" : "invalid") << "\n";
      for (const auto& v : violations) std::cout << "  " << v.to_string() << ": " << v.detail << "\n";
    }
    return violations.empty() ? kOk : kInvalid;
  });
  if (cfg.json && !docs.empty()) emit(docs, docs.size() > 1);
  return rc;
}

int cmd_analyze(const RunConfig& cfg) {
  Json docs = Json::array();
  const AnalysisOptions opts = analysis_options(cfg);
  int rc = for_each_symbol(cfg.paths, [&](const NamedSymbol& ns) {
    const AnalysisReport rep = analyze(ns.symbol, opts);
    if (cfg.json) {
      docs.push_back(report_to_json(rep, {cfg.emit_dessin}));
    } else {
      print_report(std::cout, ns.name, rep, cfg);
    }
    return kOk;
  });
  if (cfg.json && !docs.empty()) emit(docs, docs.size() > 1);
  return rc;
}

int cmd_dessin(const RunConfig& cfg) {
  Json docs = Json::array();
  DecomposeOptions dopts;
  dopts.face_budget = cfg.face_budget;
  int rc = for_each_symbol(cfg.paths, [&](const NamedSymbol& ns) {
    const auto violations = validate_hfs(ns.symbol, dopts);
    if (!violations.empty()) throw InvalidSymbol(code_name(violations.front().code), violations.front().detail);
    const auto [s0, s1] = dessin(build_map(ns.symbol, dopts));
    if (cfg.json) {
      docs.push_back(Json{{"file", ns.name}, {"degree", s0.degree()}, {"sigma0", s0.to_string()}, {"sigma1", s1.to_string()}});
    } else {
      std::cout << ns.name << "\n  sigma0 " << s0.to_string() << "\n  sigma1 " << s1.to_string() << "\n";
    }
    return kOk;
  });
  if (cfg.json && !docs.empty()) emit(docs, docs.size() > 1);
  return rc;
}

int cmd_batch(const RunConfig& cfg, const std::string& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    std::cerr << "cannot read directory " << dir << "\n";
    return kIo;
  }
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    const auto ext = entry.path().extension().string();
    if (entry.is_regular_file() && (ext == ".hfs" || ext == ".json")) files.push_back(entry.path().string());
  }
  if (ec) {
    std::cerr << "cannot list " << dir << ": " << ec.message() << "\n";
    return kIo;
  }
  std::sort(files.begin(), files.end());

  const AnalysisOptions opts = analysis_options(cfg);
  Json rows = Json::array();
  std::ostringstream details;
  std::vector<std::array<std::string, 6>> table;
  int failures = 0, total = 0;
  for (const auto& f : files) {
    const std::string name = fs::path(f).filename().string();
    ++total;
    int rc = for_each_symbol({f}, [&](const NamedSymbol& ns) {
      const AnalysisReport rep = analyze(ns.symbol, opts);
      const std::string label = name + ns.name.substr(f.size());
      Json rj = report_to_json(rep, {cfg.emit_dessin});
      rows.push_back(Json{{"name", label},
                          {"q", rep.symbol.q},
                          {"index", rep.invariants.index},
                          {"normal", rep.normal},
                          {"level", rep.invariants.level},
                          {"congruence", rj["congruence"]["verdict"]},
                          {"report", rj}});
      table.push_back({label, std::to_string(rep.symbol.q), std::to_string(rep.invariants.index),
                       rep.normal ? "yes" : "no", std::to_string(rep.invariants.level),
                       verdict_text(rep.congruence)});
      print_report(details, label, rep, cfg);
      return kOk;
    });
    if (rc != kOk) {
      ++failures;
      rows.push_back(Json{{"name", name}, {"error", rc}});
      table.push_back({name, "-", "-", "-", "-", "error"});
    }
  }
  if (cfg.json) {
    std::cout << Json{{"directory", dir}, {"files", rows}}.dump(2) << "\n";
  } else {
    std::cout << std::left << std::setw(40) << "name" << std::setw(4) << "q" << std::setw(7) << "index"
              << std::setw(8) << "normal" << std::setw(7) << "level" << "congruence\n";
    for (const auto& r : table)
      std::cout << std::left << std::setw(40) << r[0] << std::setw(4) << r[1] << std::setw(7) << r[2]
                << std::setw(8) << r[3] << std::setw(7) << r[4] << r[5] << "\n";
    if (!table.empty()) std::cout << "\n" << details.str();
  }
  return total > 0 && failures == total ? kInvalid : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze finite-index subgroups of Hecke groups given as Hecke-Farey symbols"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string batch_dir;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "Machine-readable output");
    sub->add_option("--face-budget", cfg.face_budget, "Maximum number of faces in a decomposition")
        ->check(CLI::PositiveNumber);
  };
  auto analysis_flags = [&](CLI::App* sub) {
    sub->add_option("--congruence", cfg.congruence, "Congruence test: hsu, oracle, both or off")
        ->check(CLI::IsMember({"hsu", "oracle", "both", "off"}));
    sub->add_option("--max-oracle-size", cfg.max_oracle_size, "Cap on matrix-group and orbit sizes")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--emit-generators", cfg.emit_generators, "List side-pairing generators");
    sub->add_flag("--emit-dessin", cfg.emit_dessin, "Include (sigma0, sigma1)");
  };

  auto* validate = app.add_subcommand("validate", "Check symbol files");
  validate->add_option("paths", cfg.paths, "Symbol files")->required();
  common(validate);

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze symbol files");
  analyze_cmd->add_option("paths", cfg.paths, "Symbol files")->required();
  common(analyze_cmd);
  analysis_flags(analyze_cmd);

  auto* batch = app.add_subcommand("batch", "Analyze every .hfs/.json file in a directory");
  batch->add_option("dir", batch_dir, "Directory")->required();
  common(batch);
  analysis_flags(batch);

  auto* dessin_cmd = app.add_subcommand("dessin", "Print (sigma0, sigma1) = (r1, r2)");
  dessin_cmd->add_option("paths", cfg.paths, "Symbol files")->required();
  common(dessin_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kInvalid;
  }

  try {
    if (*validate) return cmd_validate(cfg);
    if (*analyze_cmd) return cmd_analyze(cfg);
    if (*batch) return cmd_batch(cfg, batch_dir);
    if (*dessin_cmd) return cmd_dessin(cfg);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
