// Text syntax for ring elements: integer polynomials in L (standing for lambda_q).

#include <cctype>
#include <sstream>

#include "hecke/errors.hpp"
#include "hecke/exact_algebra.hpp"

namespace hecke {

namespace {

class ExprParser {
 public:
  ExprParser(int q, std::string_view text) : q_(q), text_(text) {}

  RingElement parse_all() {
    RingElement v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in ring element \"" + std::string(text_) + "\"", 1,
                     static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RingElement expr() {
    RingElement acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RingElement term() {
    RingElement acc = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == 'L' || c == '(') {
        acc *= unary();  // implicit product, as in 2L or 3(L+1)
      } else {
        return acc;
      }
    }
  }

  RingElement unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  RingElement power() {
    RingElement base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 4096) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  RingElement atom() {
    char c = peek();
    if (c == 'L') {
      ++pos_;
      return RingElement::lambda(q_);
    }
    if (c == '(') {
      ++pos_;
      RingElement v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RingElement(q_, BigInt(std::string(text_.substr(start, pos_ - start))));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  int q_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement RingElement::parse(int q, std::string_view text) {
  return ExprParser(q, text).parse_all();
}

std::string RingElement::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? '-' : '+');
    }
    if (i == 0 || mag != 1) out << mag;
    if (i >= 1) out << 'L';
    if (i >= 2) out << '^' << i;
    first = false;
  }
  return first ? std::string("0") : out.str();
}

}  // namespace hecke
