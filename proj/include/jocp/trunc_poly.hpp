#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jocp/rational.hpp"

namespace jocp {

// Element of Q[y]/(y^{t+1}): coefficients of y^0..y^t, exact rationals.
// The truncation bound t travels with every value and binary operations
// reject mismatched bounds.
class TruncPoly {
 public:
  explicit TruncPoly(std::size_t bound);  // zero element, t = bound >= 1
  static TruncPoly constant(std::size_t bound, const Rational& c);
  static TruncPoly y(std::size_t bound);
  static TruncPoly monomial(std::size_t bound, std::size_t degree,
                            const Rational& c);
  // coeffs may be shorter than bound+1; missing entries are zero.
  static TruncPoly from_coeffs(std::size_t bound, std::vector<Rational> coeffs);

  std::size_t bound() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const;
  void set(std::size_t i, const Rational& c);

  bool is_zero() const;
  bool reduced() const;  // zero constant term
  bool has_integer_coeffs() const;

  TruncPoly operator-() const;
  TruncPoly operator+(const TruncPoly& o) const;
  TruncPoly operator-(const TruncPoly& o) const;
  TruncPoly operator*(const TruncPoly& o) const;
  TruncPoly scaled(const Rational& c) const;

  // Multiplicative inverse; requires a nonzero constant term. Exact because
  // the nilpotent tail terminates.
  TruncPoly inverse() const;
  TruncPoly pow(const BigInt& e) const;  // negative e inverts first
  TruncPoly pow(long e) const;

  bool operator==(const TruncPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const TruncPoly& o) const { return !(*this == o); }

  // Human form: "9y + 6y^2", "1 + y/3", "0".
  std::string str() const;
  // One "num/den" string per degree, index = degree.
  std::vector<std::string> coeff_strings() const;
  static TruncPoly from_strings(std::size_t bound,
                                const std::vector<std::string>& coeffs);

 private:
  std::vector<Rational> coeffs_;  // size bound + 1
};

// mu_s = 2*T_s(1 + y/2) - 2 truncated at the ring bound: the degree-s
// additive basis element (realified s-th tensor power class). Integer
// coefficients, zero constant term, monic at y^s when s <= bound.
TruncPoly mu_poly(std::size_t s, std::size_t bound);

// Integer coefficients c_1..c_n with y^n = sum_s c_s * mu_s, exact.
// Requires 1 <= n <= bound.
std::vector<BigInt> monomial_to_mu(std::size_t n, std::size_t bound);

}  // namespace jocp
