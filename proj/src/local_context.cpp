#include "jocp/local_context.hpp"

#include <stdexcept>

namespace jocp {

namespace {

std::vector<long> distinct_prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

long nu_long(long p, long n) {
  if (n == 0) throw std::invalid_argument("nu_long: n must be nonzero");
  if (n < 0) n = -n;
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool generates_units_mod_p2(long p, long k) {
  if (p == 2) return k % 4 == 3 || k % 4 == -1;
  if (k % p == 0) return false;
  const long group_order = p * (p - 1);
  const BigInt p2 = BigInt(p) * p;
  const BigInt base(k);
  for (long f : distinct_prime_factors(group_order)) {
    BigInt r;
    mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(),
                static_cast<unsigned long>(group_order / f), p2.get_mpz_t());
    if (r == 1) return false;
  }
  return true;
}

LocalContext make_context(long p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("make_context: " + std::to_string(p) +
                                " is not prime");
  }
  if (p == 2) return LocalContext{2, 3, 1};
  for (long k = 3;; k += 2) {
    if (k % p == 0) continue;
    if (generates_units_mod_p2(p, k)) {
      return LocalContext{p, k, (k - 1) / 2};
    }
  }
}

long nu_power_minus_one(const LocalContext& ctx, long n) {
  if (n < 1) throw std::invalid_argument("nu_power_minus_one: n must be >= 1");
  if (ctx.p == 2) return 3 + nu_long(2, n);
  if ((2 * n) % (ctx.p - 1) != 0) return 0;
  return 1 + nu_long(ctx.p, n);
}

long nu_power_product(const LocalContext& ctx, long s, long r) {
  if (s < 1 || r < s) {
    throw std::invalid_argument("nu_power_product: need 1 <= s <= r");
  }
  if (ctx.p == 2) {
    long acc = 3 * (r - s + 1);
    for (long i = s; i <= r; ++i) acc += nu_long(2, i);
    return acc;
  }
  auto partial = [&](long x) {
    long b = 2 * x / (ctx.p - 1);
    long acc = b;
    for (long i = 1; i <= b; ++i) acc += nu_long(ctx.p, i);
    return acc;
  };
  return partial(r) - partial(s - 1);
}

}  // namespace jocp
