#pragma once

// Exact arithmetic in Z[lambda_q], lambda_q = 2 cos(pi / q).
//
// Elements are integer coefficient vectors of length d = deg minpoly(lambda_q),
// always reduced modulo the minimal polynomial, so equality is coefficient-wise.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Integer polynomial, coefficients lowest degree first, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  double evaluate(double x) const;
  std::string to_string(char var = 'x') const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Monic minimal polynomial of 2cos(pi/q) over Z. Throws DomainError for q < 3.
IntPolynomial minimal_polynomial(int q);

/// Per-q data shared by every element of Z[lambda_q]. Lives for the whole process.
struct RingContext {
  int q = 0;
  int degree = 0;
  IntPolynomial minpoly;
  // lambda_q lies in [lambda_lo, lambda_lo + 1] / 2^lambda_bits
  BigInt lambda_lo;
  unsigned lambda_bits = 0;
};

const RingContext& ring_context(int q);

class RingElement {
 public:
  /// Zero of Z[lambda_q].
  explicit RingElement(int q);
  RingElement(int q, long long value);
  RingElement(int q, BigInt value);

  static RingElement lambda(int q);
  /// Coefficients of sum c_i lambda^i, any length; reduced on construction.
  static RingElement from_coefficients(int q, std::vector<BigInt> coeffs);

  int q() const { return ctx_->q; }
  const RingContext& context() const { return *ctx_; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const;
  bool is_one() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend bool operator==(const RingElement& a, const RingElement& b);
  friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

  RingElement pow(unsigned k) const;
  /// Floating approximation, for display and heuristics only.
  double approx() const;

  /// Polynomial in the symbol L, e.g. "L^2-1", "2L+1", "-3".
  std::string to_string() const;
  static RingElement parse(int q, std::string_view text);

 private:
  RingElement(const RingContext* ctx, std::vector<BigInt> coeffs);
  void check_same_ring(const RingElement& o) const;

  const RingContext* ctx_;
  std::vector<BigInt> coeffs_;  // length == ctx_->degree
};

/// Sign of the real number obtained by substituting lambda_q = 2cos(pi/q).
int sign_of(const RingElement& a);

/// sign_of(a - b)
int compare(const RingElement& a, const RingElement& b);

/// c with b*c == a if it exists in Z[lambda_q]. Throws DomainError if b == 0.
std::optional<RingElement> divide_exact(const RingElement& a, const RingElement& b);

/// Inverse of u if u is a unit of Z[lambda_q].
std::optional<RingElement> unit_inverse(const RingElement& u);

/// Element of Q(lambda_q); used for exact division.
class RationalRingElement {
 public:
  RationalRingElement(int q, std::vector<BigRational> coeffs);
  explicit RationalRingElement(const RingElement& a);

  int q() const { return q_; }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  bool is_integral() const;
  /// Requires is_integral().
  RingElement to_integral() const;

 private:
  int q_;
  std::vector<BigRational> coeffs_;
};

}  // namespace hecke
