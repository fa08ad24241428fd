#include <cctype>
#include <optional>

#include "hecke/errors.hpp"
#include "hecke/hfs.hpp"

namespace hecke {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

struct Line {
  std::string text;
  int number;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Splits on sep outside parentheses, keeping 1-based start columns of the
// trimmed pieces.
std::vector<Token> split_top(std::string_view s, char sep, int base_column) {
  std::vector<Token> out;
  int depth = 0;
  std::size_t start = 0;
  auto push = [&](std::size_t end) {
    std::string_view piece = s.substr(start, end - start);
    std::size_t lead = 0;
    while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
    out.push_back({trim(piece), base_column + static_cast<int>(start + lead)});
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      push(i);
      start = i + 1;
    }
  }
  push(s.size());
  return out;
}

RingElement parse_ring(int q, const Token& tok, int line) {
  try {
    return RingElement::parse(q, tok.text);
  } catch (const ParseError&) {
    throw ParseError("bad ring element \"" + tok.text + "\"", line, tok.column);
  }
}

Cusp parse_cusp(int q, const Token& tok, int line) {
  if (tok.text.empty()) throw ParseError("empty cusp", line, tok.column);
  if (tok.text == "-inf") return Cusp::neg_infinity(q);
  if (tok.text == "inf") return Cusp::infinity(q);
  auto parts = split_top(tok.text, '/', tok.column);
  if (parts.size() == 1) return {parse_ring(q, parts[0], line), RingElement(q, 1)};
  if (parts.size() != 2) throw ParseError("cusp must be <num>/<den>", line, tok.column);
  Cusp c{parse_ring(q, parts[0], line), parse_ring(q, parts[1], line)};
  if (c.num.is_zero() && c.den.is_zero()) throw ParseError("cusp 0/0", line, tok.column);
  return c;
}

PairingLabel parse_label(const Token& tok, int line) {
  const std::string& t = tok.text;
  auto all_digits = [](std::string_view s) {
    if (s.empty() || s.size() > 9) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (t == "o") return PairingLabel::circle();
  if (t == "b") return PairingLabel::bullet();
  if (all_digits(t)) {
    int v = std::stoi(t);
    if (v < 1) throw ParseError("free pairing labels are natural numbers", line, tok.column);
    return PairingLabel::free(v);
  }
  if (t.size() > 1 && t[0] == 'e' && all_digits(std::string_view(t).substr(1)))
    return PairingLabel::er(std::stoi(t.substr(1)));
  throw ParseError("unknown label \"" + t + "\"", line, tok.column);
}

// "key: value" or "key=value"; returns nullopt if the line has neither.
std::optional<std::pair<std::string, Token>> split_key(const Line& l) {
  std::size_t sep = l.text.find_first_of(":=");
  if (sep == std::string::npos) return std::nullopt;
  std::string key = trim(std::string_view(l.text).substr(0, sep));
  std::string_view rest = std::string_view(l.text).substr(sep + 1);
  std::size_t lead = 0;
  while (lead < rest.size() && std::isspace(static_cast<unsigned char>(rest[lead]))) ++lead;
  return std::make_pair(key, Token{trim(rest), static_cast<int>(sep + 2 + lead)});
}

HeckeFareySymbol parse_record(const std::vector<Line>& lines) {
  HeckeFareySymbol h;
  std::optional<Line> cusp_line, label_line;
  Token cusp_tok, label_tok;
  bool have_q = false;
  for (const Line& l : lines) {
    auto kv = split_key(l);
    if (!kv) throw ParseError("expected 'key: value'", l.number, 1);
    const auto& [key, val] = *kv;
    if (key == "q") {
      if (have_q) throw ParseError("duplicate q", l.number, 1);
      try {
        std::size_t used = 0;
        h.q = std::stoi(val.text, &used);
        if (used != val.text.size()) throw std::invalid_argument("trailing");
      } catch (const std::logic_error&) {
        throw ParseError("q must be an integer", l.number, val.column);
      }
      if (h.q < 3) throw ParseError("q must be at least 3", l.number, val.column);
      have_q = true;
    } else if (key == "cusps") {
      if (cusp_line) throw ParseError("duplicate cusps line", l.number, 1);
      cusp_line = l;
      cusp_tok = val;
    } else if (key == "labels") {
      if (label_line) throw ParseError("duplicate labels line", l.number, 1);
      label_line = l;
      label_tok = val;
    } else {
      throw ParseError("unknown key \"" + key + "\"", l.number, 1);
    }
  }
  const int last = lines.empty() ? 1 : lines.back().number;
  if (!have_q) throw ParseError("missing q", lines.empty() ? 1 : lines.front().number, 1);
  if (!cusp_line) throw ParseError("missing cusps line", last, 1);
  if (!label_line) throw ParseError("missing labels line", last, 1);

  for (const Token& t : split_top(cusp_tok.text, ',', cusp_tok.column))
    h.cusps.push_back(parse_cusp(h.q, t, cusp_line->number));
  if (h.cusps.size() < 3 || !(h.cusps.front() == Cusp::neg_infinity(h.q)) ||
      !(h.cusps.back() == Cusp::infinity(h.q)))
    throw ParseError("cusps must run from -inf to inf", cusp_line->number, cusp_tok.column);
  bool has_zero = false;
  for (const Cusp& c : h.cusps)
    if (c.num.is_zero() && !c.den.is_zero()) has_zero = true;
  if (!has_zero) throw ParseError("no cusp equals 0", cusp_line->number, cusp_tok.column);

  for (const Token& t : split_top(label_tok.text, ',', label_tok.column))
    h.labels.push_back(parse_label(t, label_line->number));
  if (h.labels.size() + 1 != h.cusps.size())
    throw ParseError("expected " + std::to_string(h.cusps.size() - 1) + " labels, found " +
                         std::to_string(h.labels.size()),
                     label_line->number, label_tok.column);
  return h;
}

}  // namespace

PairingLabel PairingLabel::parse(std::string_view text) { return parse_label({trim(text), 1}, 1); }

std::vector<HeckeFareySymbol> parse_hfs_records(std::string_view text) {
  std::vector<std::vector<Line>> records;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string raw(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (trim(raw).empty()) continue;
    // keep original columns; only trailing space is dropped
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.pop_back();
    Line line{raw, number};
    auto kv = split_key(line);
    if (kv && kv->first == "q") records.emplace_back();
    if (records.empty()) throw ParseError("symbol must start with a q= line", number, 1);
    records.back().push_back(std::move(line));
  }
  std::vector<HeckeFareySymbol> out;
  for (const auto& r : records) out.push_back(parse_record(r));
  return out;
}

HeckeFareySymbol parse_hfs(std::string_view text) {
  auto records = parse_hfs_records(text);
  if (records.size() != 1)
    throw ParseError("expected one symbol, found " + std::to_string(records.size()), 1, 1);
  return std::move(records.front());
}

std::string serialize_hfs(const HeckeFareySymbol& hfs) {
  std::string out = "q=" + std::to_string(hfs.q) + "\ncusps: ";
  for (std::size_t i = 0; i < hfs.cusps.size(); ++i) {
    if (i) out += ", ";
    out += hfs.cusps[i].to_string();
  }
  out += "\nlabels: ";
  for (std::size_t i = 0; i < hfs.labels.size(); ++i) {
    if (i) out += ", ";
    out += hfs.labels[i].to_string();
  }
  out += "\n";
  return out;
}

}  // namespace hecke
