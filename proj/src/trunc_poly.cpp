#include "jocp/trunc_poly.hpp"

#include <stdexcept>

namespace jocp {

namespace {

void check_same_bound(const TruncPoly& a, const TruncPoly& b) {
  if (a.bound() != b.bound()) {
    throw std::invalid_argument("mismatched truncation bounds: " +
                                std::to_string(a.bound()) + " vs " +
                                std::to_string(b.bound()));
  }
}

}  // namespace

TruncPoly::TruncPoly(std::size_t bound) : coeffs_(bound + 1, Rational(0)) {
  if (bound < 1) throw std::invalid_argument("truncation bound must be >= 1");
}

TruncPoly TruncPoly::constant(std::size_t bound, const Rational& c) {
  TruncPoly p(bound);
  p.coeffs_[0] = c;
  return p;
}

TruncPoly TruncPoly::y(std::size_t bound) {
  return monomial(bound, 1, Rational(1));
}

TruncPoly TruncPoly::monomial(std::size_t bound, std::size_t degree,
                              const Rational& c) {
  TruncPoly p(bound);
  if (degree <= bound) p.coeffs_[degree] = c;
  return p;
}

TruncPoly TruncPoly::from_coeffs(std::size_t bound,
                                 std::vector<Rational> coeffs) {
  if (coeffs.size() > bound + 1) {
    throw std::invalid_argument("coefficient list longer than bound + 1");
  }
  TruncPoly p(bound);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    p.coeffs_[i] = std::move(coeffs[i]);
  }
  return p;
}

const Rational& TruncPoly::operator[](std::size_t i) const {
  return coeffs_.at(i);
}

void TruncPoly::set(std::size_t i, const Rational& c) { coeffs_.at(i) = c; }

bool TruncPoly::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool TruncPoly::reduced() const { return coeffs_[0] == 0; }

bool TruncPoly::has_integer_coeffs() const {
  for (const auto& c : coeffs_) {
    if (!is_integer(c)) return false;
  }
  return true;
}

TruncPoly TruncPoly::operator-() const {
  TruncPoly out(bound());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
  return out;
}

TruncPoly TruncPoly::operator+(const TruncPoly& o) const {
  check_same_bound(*this, o);
  TruncPoly out(bound());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  }
  return out;
}

TruncPoly TruncPoly::operator-(const TruncPoly& o) const {
  check_same_bound(*this, o);
  TruncPoly out(bound());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  }
  return out;
}

TruncPoly TruncPoly::operator*(const TruncPoly& o) const {
  check_same_bound(*this, o);
  TruncPoly out(bound());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return out;
}

TruncPoly TruncPoly::scaled(const Rational& c) const {
  TruncPoly out(bound());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i] = coeffs_[i] * c;
  }
  return out;
}

TruncPoly TruncPoly::inverse() const {
  if (coeffs_[0] == 0) {
    throw std::invalid_argument("cannot invert: zero constant term");
  }
  const Rational lead = Rational(1) / coeffs_[0];
  TruncPoly out(bound());
  out.coeffs_[0] = lead;
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    Rational acc(0);
    for (std::size_t i = 1; i <= n; ++i) {
      acc += coeffs_[i] * out.coeffs_[n - i];
    }
    out.coeffs_[n] = -lead * acc;
  }
  return out;
}

TruncPoly TruncPoly::pow(const BigInt& e) const {
  if (e < 0) return inverse().pow(BigInt(-e));
  TruncPoly result = constant(bound(), Rational(1));
  if (e == 0) return result;
  TruncPoly base = *this;
  const auto nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < nbits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
    if (i + 1 < nbits) base = base * base;
  }
  return result;
}

TruncPoly TruncPoly::pow(long e) const { return pow(BigInt(e)); }

std::string TruncPoly::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const BigInt num = abs(BigInt(c.get_num()));
    const BigInt den = c.get_den();
    std::string term;
    if (i == 0) {
      term = num.get_str();
      if (den != 1) term += "/" + den.get_str();
    } else {
      std::string mono = (i == 1) ? "y" : "y^" + std::to_string(i);
      if (num != 1) term += num.get_str();
      term += mono;
      if (den != 1) term += "/" + den.get_str();
    }
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> TruncPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_string(c));
  return out;
}

TruncPoly TruncPoly::from_strings(std::size_t bound,
                                  const std::vector<std::string>& coeffs) {
  std::vector<Rational> parsed;
  parsed.reserve(coeffs.size());
  for (const auto& s : coeffs) parsed.push_back(parse_rational(s));
  return from_coeffs(bound, std::move(parsed));
}

TruncPoly mu_poly(std::size_t s, std::size_t bound) {
  if (s < 1) throw std::invalid_argument("mu_poly: s must be >= 1");
  // Chebyshev recurrence T_{j+1} = 2x T_j - T_{j-1} at x = 1 + y/2; truncation
  // commutes with the recurrence, so this equals the truncated exact value.
  const TruncPoly x =
      TruncPoly::from_coeffs(bound, {Rational(1), Rational(1, 2)});
  TruncPoly t_prev = TruncPoly::constant(bound, Rational(1));
  TruncPoly t_cur = x;
  for (std::size_t j = 2; j <= s; ++j) {
    TruncPoly t_next = (x * t_cur).scaled(Rational(2)) - t_prev;
    t_prev = t_cur;
    t_cur = t_next;
  }
  return t_cur.scaled(Rational(2)) - TruncPoly::constant(bound, Rational(2));
}

std::vector<BigInt> monomial_to_mu(std::size_t n, std::size_t bound) {
  if (n < 1 || n > bound) {
    throw std::invalid_argument("monomial_to_mu: need 1 <= n <= bound");
  }
  std::vector<TruncPoly> mus;
  mus.reserve(n);
  for (std::size_t s = 1; s <= n; ++s) mus.push_back(mu_poly(s, bound));

  // The family {mu_s} is monic triangular in degree, so back-substitution
  // from the top produces the unique integer coordinates.
  TruncPoly rest = TruncPoly::monomial(bound, n, Rational(1));
  std::vector<BigInt> c(n);
  for (std::size_t s = n; s >= 1; --s) {
    const Rational cs = rest[s];
    c[s - 1] = to_integer(cs);
    rest = rest - mus[s - 1].scaled(cs);
  }
  if (!rest.is_zero()) {
    throw std::logic_error("monomial_to_mu: nonzero remainder");
  }
  return c;
}

}  // namespace jocp
