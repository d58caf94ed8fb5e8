#include "jocp/adams.hpp"

#include <stdexcept>

namespace jocp {

namespace {

void check_odd_k(long k) {
  if (k < 1 || k % 2 == 0) {
    throw std::invalid_argument("operator index k must be odd and >= 1");
  }
}

void check_reduced(const TruncPoly& p) {
  if (!p.reduced()) {
    throw std::invalid_argument("expected a reduced element (zero constant term)");
  }
}

// Every denominator must be built from primes dividing k.
void check_denominators_divide_k_powers(const TruncPoly& p, long k) {
  const BigInt kz(k);
  for (std::size_t i = 0; i <= p.bound(); ++i) {
    BigInt d = p[i].get_den();
    while (d != 1) {
      BigInt g = gcd(d, kz);
      if (g == 1) {
        throw std::logic_error("theta image has a denominator not a power of " +
                               std::to_string(k) + ": " + to_string(p[i]));
      }
      d /= g;
    }
  }
}

}  // namespace

std::vector<Rational> bott_coefficients(long k) {
  check_odd_k(k);
  const unsigned long q = static_cast<unsigned long>((k - 1) / 2);
  std::vector<Rational> b(q + 1);
  for (unsigned long j = 0; j <= q; ++j) {
    Rational v(BigInt(k) * binomial(q + j, 2 * j), BigInt(2 * j + 1));
    v.canonicalize();
    b[j] = v;
  }
  return b;
}

TruncPoly psi_y(long k, std::size_t bound) {
  const auto b = bott_coefficients(k);
  TruncPoly series(bound);
  for (std::size_t j = 0; j < b.size() && j <= bound; ++j) {
    series.set(j, b[j]);
  }
  const TruncPoly sq = series * series;
  TruncPoly out(bound);
  for (std::size_t i = 1; i <= bound; ++i) out.set(i, sq[i - 1]);
  return out;
}

TruncPoly psi_apply(long k, const TruncPoly& p) {
  check_reduced(p);
  const std::size_t t = p.bound();
  const TruncPoly base = psi_y(k, t);
  TruncPoly out(t);
  TruncPoly power = base;
  for (std::size_t r = 1; r <= t; ++r) {
    if (r > 1) power = power * base;
    if (p[r] != 0) out = out + power.scaled(p[r]);
  }
  return out;
}

Rational c_coefficient(long k, std::size_t j, std::size_t r) {
  check_odd_k(k);
  if (r < 1) throw std::invalid_argument("c_coefficient: r must be >= 1");
  const auto b = bott_coefficients(k);
  // Coefficient of y^j in (sum b_l y^l)^{2r}, degrees above j discarded.
  std::vector<Rational> acc{Rational(1)};
  for (std::size_t step = 0; step < 2 * r; ++step) {
    std::vector<Rational> next(std::min(acc.size() + b.size() - 1, j + 1),
                               Rational(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] == 0) continue;
      for (std::size_t l = 0; l < b.size() && i + l < next.size(); ++l) {
        next[i + l] += acc[i] * b[l];
      }
    }
    acc = std::move(next);
  }
  return j < acc.size() ? acc[j] : Rational(0);
}

RationalMatrix one_minus_psi_matrix(long k, std::size_t t) {
  check_odd_k(k);
  if (t < 1) throw std::invalid_argument("one_minus_psi_matrix: t must be >= 1");
  RationalMatrix a(t, std::vector<Rational>(t, Rational(0)));
  for (std::size_t r = 1; r <= t; ++r) {
    a[r - 1][r - 1] =
        Rational(1) - Rational(pow_ui(BigInt(k), 2 * static_cast<unsigned long>(r)));
    const std::size_t jr = (r - 1) / static_cast<std::size_t>(k) + 1;
    for (std::size_t i = jr; i < r; ++i) {
      a[r - 1][i - 1] = -c_coefficient(k, r - i, i);
    }
  }
  return a;
}

std::vector<Rational> apply_matrix(const RationalMatrix& a,
                                   const std::vector<Rational>& v) {
  std::vector<Rational> out(a.size(), Rational(0));
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != v.size()) {
      throw std::invalid_argument("apply_matrix: dimension mismatch");
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (a[r][i] != 0 && v[i] != 0) out[r] += a[r][i] * v[i];
    }
  }
  return out;
}

TruncPoly theta_mu(long k, std::size_t bound, std::size_t s) {
  check_odd_k(k);
  const auto b = bott_coefficients(k);
  const TruncPoly mu = mu_poly(s, bound);
  TruncPoly acc = TruncPoly::constant(bound, b[0]);
  TruncPoly power = TruncPoly::constant(bound, Rational(1));
  for (std::size_t j = 1; j < b.size(); ++j) {
    power = power * mu;
    acc = acc + power.scaled(b[j]);
  }
  Rational inv_k(1, k);
  inv_k.canonicalize();
  return acc.scaled(inv_k);
}

TruncPoly theta_apply(long k, const TruncPoly& p) {
  check_odd_k(k);
  check_reduced(p);
  if (!p.has_integer_coeffs()) {
    throw std::invalid_argument(
        "theta_apply: exponential extension needs integer coefficients");
  }
  const std::size_t t = p.bound();

  // Exponents in the mu basis: e_s = sum_n m_n c_{n,s}.
  std::vector<BigInt> e(t + 1, BigInt(0));
  for (std::size_t n = 1; n <= t; ++n) {
    if (p[n] == 0) continue;
    const BigInt mn = to_integer(p[n]);
    const auto c = monomial_to_mu(n, t);
    for (std::size_t s = 1; s <= n; ++s) e[s] += mn * c[s - 1];
  }

  TruncPoly out = TruncPoly::constant(t, Rational(1));
  for (std::size_t s = 1; s <= t; ++s) {
    if (e[s] != 0) out = out * theta_mu(k, t, s).pow(e[s]);
  }
  check_denominators_divide_k_powers(out, k);
  return out;
}

}  // namespace jocp
