#include "jocp/rational.hpp"

#include <stdexcept>

namespace jocp {

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

BigInt parse_bigint(const std::string& s) {
  try {
    return BigInt(s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
}

Rational parse_rational(const std::string& s) {
  Rational x;
  try {
    x = Rational(s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  if (x.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + s + "'");
  }
  x.canonicalize();
  return x;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

BigInt to_integer(const Rational& x) {
  if (!is_integer(x)) {
    throw std::invalid_argument("not an integer: " + to_string(x));
  }
  return x.get_num();
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt pow_ui(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  BigInt z(n);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  for (long i = 2; i <= n; ++i) {
    if (is_prime(i)) out.push_back(i);
  }
  return out;
}

long next_prime(long n) {
  long i = n + 1;
  while (!is_prime(i)) ++i;
  return i;
}

}  // namespace jocp
