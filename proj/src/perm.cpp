#include "hecke/perm.hpp"

#include <cctype>
#include <numeric>

#include "hecke/errors.hpp"

namespace hecke {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int y : images_) {
    if (y < 0 || static_cast<std::size_t>(y) >= images_.size() || seen[static_cast<std::size_t>(y)])
      throw DomainError("permutation images are not a bijection");
    seen[static_cast<std::size_t>(y)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int x = c[i] - 1, y = c[(i + 1) % c.size()] - 1;
      if (x < 0 || x >= n || y < 0 || y >= n) throw DomainError("cycle point out of range");
      if (used[static_cast<std::size_t>(x)]) throw DomainError("point repeated in cycles");
      used[static_cast<std::size_t>(x)] = 1;
      im[static_cast<std::size_t>(x)] = y;
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::parse(std::string_view text, int degree) {
  std::vector<std::vector<int>> cycles;
  int largest = 0;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) {
    throw ParseError(msg + " in permutation \"" + std::string(text) + "\"", 1, static_cast<int>(i) + 1);
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<int> cyc;
    skip();
    while (i < text.size() && text[i] != ')') {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) fail("expected a point");
      if (i - start > 7) fail("point too large");
      int v = std::stoi(std::string(text.substr(start, i - start)));
      if (v < 1) fail("points are 1-based");
      cyc.push_back(v);
      largest = std::max(largest, v);
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip();
      } else if (i < text.size() && text[i] != ')') {
        fail("expected ',' or ')'");
      }
    }
    if (i >= text.size()) fail("unterminated cycle");
    ++i;
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip();
  }
  return from_cycles(std::max(degree, largest), cycles);
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (o.degree() != degree()) throw DomainError("composing permutations of different degree");
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    p.images_[x] = images_[static_cast<std::size_t>(o.images_[x])];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    p.images_[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  return p;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Permutation result = identity(degree());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (int x = static_cast<int>(s); !seen[static_cast<std::size_t>(x)]; x = images_[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<int> out;
  for (const auto& c : cycles()) out.push_back(static_cast<int>(c.size()));
  return out;
}

int Permutation::fixed_points() const {
  int n = 0;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] == static_cast<int>(x)) ++n;
  return n;
}

BigInt Permutation::order() const {
  BigInt l = 1;
  for (int len : cycle_lengths()) l = boost::multiprecision::lcm(l, BigInt(len));
  return l;
}

bool Permutation::is_even() const {
  int transpositions = 0;
  for (int len : cycle_lengths()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::string Permutation::to_string() const {
  if (images_.empty()) return "()";
  std::string out;
  for (const auto& c : cycles()) {
    out += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(c[i] + 1);
    }
    out += ")";
  }
  return out;
}

}  // namespace hecke
