#include "jocp/jorder.hpp"

#include <algorithm>

#include "jocp/group.hpp"

namespace jocp {

namespace {

// Signed products prod_{l=1}^{r} (1 - k^{2l}), index 0 -> empty product 1.
std::vector<BigInt> descending_products(long k, std::size_t t) {
  std::vector<BigInt> q(t + 1);
  q[0] = 1;
  for (std::size_t r = 1; r <= t; ++r) {
    q[r] = q[r - 1] * (BigInt(1) - pow_ui(BigInt(k), 2 * static_cast<unsigned long>(r)));
  }
  return q;
}

// Positive products prod_{l=1}^{r} (k^{2l} - 1).
std::vector<BigInt> ascending_products(long k, std::size_t t) {
  std::vector<BigInt> w(t + 1);
  w[0] = 1;
  for (std::size_t r = 1; r <= t; ++r) {
    w[r] = w[r - 1] * (pow_ui(BigInt(k), 2 * static_cast<unsigned long>(r)) - 1);
  }
  return w;
}

BigInt exact_quotient(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::size_t j_lower(std::size_t r, long k) {
  return (r - 1) / static_cast<std::size_t>(k) + 1;
}

}  // namespace

ElementSpec ElementSpec::make(long m, std::vector<BigInt> coeffs) {
  if (m < 2 || m % 2 != 0) {
    throw std::invalid_argument(
        "m must be an even integer >= 2 (odd complex dimension unsupported)");
  }
  if (coeffs.size() != static_cast<std::size_t>(m / 2)) {
    throw std::invalid_argument("expected " + std::to_string(m / 2) +
                                " coefficients, got " +
                                std::to_string(coeffs.size()));
  }
  ElementSpec spec;
  spec.m = m;
  spec.coeffs = std::move(coeffs);
  return spec;
}

ElementSpec ElementSpec::monomial(long m, std::size_t n) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(m / 2), BigInt(0));
  if (n < 1 || n > coeffs.size()) {
    throw std::invalid_argument("monomial degree out of range");
  }
  coeffs[n - 1] = 1;
  return make(m, std::move(coeffs));
}

bool ElementSpec::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const BigInt& c) { return c == 0; });
}

TruncPoly ElementSpec::poly() const {
  TruncPoly p(t());
  for (std::size_t r = 1; r <= t(); ++r) p.set(r, Rational(coeffs[r - 1]));
  return p;
}

std::vector<Rational> m_values(const LocalContext& ctx,
                               const ElementSpec& spec) {
  const std::size_t t = spec.t();
  const long k = ctx.k;
  const auto q = descending_products(k, t);
  std::vector<Rational> m(t + 1, Rational(0));
  m[1] = Rational(spec.coeffs[0]);
  for (std::size_t r = 2; r <= t; ++r) {
    Rational acc = Rational(spec.coeffs[r - 1]) * Rational(q[r - 1]);
    for (std::size_t i = j_lower(r, k); i < r; ++i) {
      acc += c_coefficient(k, r - i, i) * Rational(exact_quotient(q[r - 1], q[i])) *
             m[i];
    }
    m[r] = acc;
  }
  return std::vector<Rational>(m.begin() + 1, m.end());
}

long valuation_psi(const LocalContext& ctx, const ElementSpec& spec) {
  const auto m = m_values(ctx, spec);
  long best = 0;
  for (std::size_t r = 1; r <= m.size(); ++r) {
    if (m[r - 1] == 0) continue;
    const long cand = nu_power_product(ctx, 1, static_cast<long>(r)) -
                      nu(ctx.p, m[r - 1]).value();
    best = std::max(best, cand);
  }
  return best;
}

long valuation_theta(const LocalContext& ctx, const ElementSpec& spec,
                     long v_cap) {
  if (v_cap < 0) throw std::invalid_argument("valuation_theta: v_cap < 0");
  if (spec.is_zero()) return 0;
  const std::size_t t = spec.t();
  const long k = ctx.k;

  const TruncPoly theta_p = theta_apply(k, spec.poly());
  const auto w = ascending_products(k, t);
  std::vector<long> target(t + 1, 0);
  for (std::size_t r = 1; r <= t; ++r) {
    target[r] = nu_power_product(ctx, 1, static_cast<long>(r));
  }
  std::vector<std::vector<Rational>> cmat(t + 1);
  for (std::size_t r = 2; r <= t; ++r) {
    cmat[r].assign(r, Rational(0));
    for (std::size_t i = j_lower(r, k); i < r; ++i) {
      cmat[r][i] = c_coefficient(k, r - i, i);
    }
  }

  TruncPoly theta_pow = theta_p;  // theta(P)^{p^v}
  for (long v = 0; v <= v_cap; ++v) {
    if (v > 0) theta_pow = theta_pow.pow(ctx.p);
    std::vector<Rational> big_l(t + 1, Rational(0));
    bool ok = true;
    for (std::size_t r = 1; r <= t && ok; ++r) {
      if (r == 1) {
        big_l[1] = theta_pow[1];
      } else {
        Rational acc = theta_pow[r] * Rational(w[r - 1]);
        for (std::size_t i = 1; i < r; ++i) {
          if (big_l[r - i] != 0 && theta_pow[i] != 0) {
            acc += big_l[r - i] * theta_pow[i] *
                   Rational(exact_quotient(w[r - 1], w[r - i]));
          }
        }
        for (std::size_t i = j_lower(r, k); i < r; ++i) {
          if (cmat[r][i] != 0 && big_l[i] != 0) {
            acc -= cmat[r][i] * big_l[i] *
                   Rational(exact_quotient(w[r - 1], w[i]));
          }
        }
        big_l[r] = acc;
      }
      if (nu(ctx.p, big_l[r]) < Valuation::of(target[r])) ok = false;
    }
    if (ok) return v;
  }
  throw CapExceededError("no admissible exponent up to v_cap = " +
                         std::to_string(v_cap));
}

long theta_cap_default(const LocalContext& ctx, const ElementSpec& spec) {
  return nu_power_product(ctx, 1, static_cast<long>(spec.t()));
}

long monomial_valuation_closed(long p, long n, long t, bool experimental) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (p != 2 && p != 3 && !experimental) {
    throw std::invalid_argument(
        "closed form proven only for p = 2, 3; set the experimental flag to "
        "evaluate it anyway");
  }
  if (n < 1 || n > t) throw std::invalid_argument("need 1 <= n <= t");
  const long d = p - 1;
  const long lo = std::max(1L, (2 * n) / d);
  const long hi = (2 * t) / d;
  const long base = (2 * (n - 1)) / d;
  long best = 0;
  for (long s = lo; s <= hi; ++s) {
    best = std::max(best, s - base + nu_long(p, s));
  }
  return best;
}

long normalized_m_valuation_closed(long p, long n, long r) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n < 1 || r < n) throw std::invalid_argument("need 1 <= n <= r");
  auto partial = [&](long x) {
    long acc = 0;
    for (long s = 1; s <= 2 * x / (p - 1); ++s) acc += nu_long(p, s);
    return acc;
  };
  return partial(r - 1) - partial(n - 1);
}

std::vector<Rational> normalized_m_values(const LocalContext& ctx, long n,
                                          long t) {
  if (n < 1 || t < n) throw std::invalid_argument("need 1 <= n <= t");
  const long k = ctx.k;
  const auto q = descending_products(k, static_cast<std::size_t>(t));
  std::vector<Rational> mbar(t + 1, Rational(0));
  mbar[n] = Rational(1);
  for (std::size_t r = n + 1; r <= static_cast<std::size_t>(t); ++r) {
    Rational acc(0);
    for (std::size_t i = std::max(j_lower(r, k), static_cast<std::size_t>(n));
         i < r; ++i) {
      if (mbar[i] == 0) continue;
      acc += c_coefficient(k, r - i, i) * Rational(exact_quotient(q[r - 1], q[i])) *
             mbar[i];
    }
    mbar[r] = acc;
  }
  return std::vector<Rational>(mbar.begin() + n, mbar.end());
}

JOrderReport full_jorder(const ElementSpec& spec, bool cross_check) {
  JOrderReport rep;
  for (long p : primes_up_to(spec.m + 1)) {
    const LocalContext ctx = make_context(p);
    const long v = valuation_psi(ctx, spec);
    if (cross_check) {
      long v_theta = -1;
      try {
        v_theta = valuation_theta(ctx, spec, v + 2);
      } catch (const CapExceededError&) {
        throw AgreementError("theta engine found no exponent near " +
                             std::to_string(v) + " at p = " + std::to_string(p));
      }
      const long v_snf = valuation_snf(p, spec);
      if (v != v_theta || v != v_snf) {
        throw AgreementError("engines disagree at p = " + std::to_string(p) +
                             ": psi=" + std::to_string(v) +
                             " theta=" + std::to_string(v_theta) +
                             " snf=" + std::to_string(v_snf));
      }
    }
    rep.valuations[p] = v;
    rep.order *= pow_ui(BigInt(p), static_cast<unsigned long>(v));
  }
  return rep;
}

VerifiedReport full_jorder_verified(const ElementSpec& spec) {
  VerifiedReport out;
  out.agree = true;
  for (long p : primes_up_to(spec.m + 1)) {
    const LocalContext ctx = make_context(p);
    EngineValues ev;
    ev.psi = valuation_psi(ctx, spec);
    try {
      ev.theta = valuation_theta(ctx, spec, ev.psi + 2);
    } catch (const CapExceededError&) {
      ev.theta = -1;
    }
    ev.snf = valuation_snf(p, spec);
    out.agree = out.agree && ev.agree();
    out.engines[p] = ev;
    out.report.valuations[p] = ev.psi;
    out.report.order *= pow_ui(BigInt(p), static_cast<unsigned long>(ev.psi));
  }
  return out;
}

}  // namespace jocp
