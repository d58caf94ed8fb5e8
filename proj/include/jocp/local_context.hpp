#pragma once

#include "jocp/rational.hpp"

namespace jocp {

// A prime p together with the odd generator k of the unit group (Z/p^2 Z)^*
// fixed for all operator computations at that prime, k = 2q + 1. We always
// pick the smallest odd generator (k = 3 at p = 2) so every downstream value
// is reproducible run to run.
struct LocalContext {
  long p = 0;
  long k = 0;
  long q = 0;
};

// Smallest-odd-generator context for a prime. Throws std::invalid_argument
// for non-primes.
LocalContext make_context(long p);

// True iff k generates (Z/p^2 Z)^*. For p = 2 this means k = 3 mod 4.
bool generates_units_mod_p2(long p, long k);

// nu_p of small integers, by repeated division.
long nu_long(long p, long n);

// nu_p(k^{2n} - 1) in closed form, n >= 1: 3 + nu_2(n) at p = 2 (k = 3);
// for odd p, zero unless 2n = 0 mod (p-1), else 1 + nu_p(n).
long nu_power_minus_one(const LocalContext& ctx, long n);

// nu_p(prod_{i=s}^{r} (k^{2i} - 1)) in closed form, 1 <= s <= r.
// Zero for odd p > 2r + 1.
long nu_power_product(const LocalContext& ctx, long s, long r);

}  // namespace jocp
