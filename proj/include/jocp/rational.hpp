#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace jocp {

using BigInt = mpz_class;
using Rational = mpq_class;

// Canonical text form: "num/den" in lowest terms, "num" when the denominator
// is 1, "0" for zero.
std::string to_string(const BigInt& n);
std::string to_string(const Rational& x);

// Accepts the same forms. Throws std::invalid_argument on malformed input or
// a zero denominator.
BigInt parse_bigint(const std::string& s);
Rational parse_rational(const std::string& s);

bool is_integer(const Rational& x);
// Throws std::invalid_argument when x has a nontrivial denominator.
BigInt to_integer(const Rational& x);

BigInt binomial(unsigned long n, unsigned long k);
BigInt pow_ui(const BigInt& base, unsigned long e);

bool is_prime(long n);
std::vector<long> primes_up_to(long n);
long next_prime(long n);  // smallest prime > n

}  // namespace jocp
