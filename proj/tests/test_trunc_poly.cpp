#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jocp/trunc_poly.hpp"
#include "test_util.hpp"

using namespace jocp;

namespace {

TruncPoly poly2(const Rational& c0, const Rational& c1, const Rational& c2) {
  return TruncPoly::from_coeffs(2, {c0, c1, c2});
}

}  // namespace

TEST_CASE("ring arithmetic in degree 2") {
  const TruncPoly y = TruncPoly::y(2);
  CHECK(y * y == TruncPoly::monomial(2, 2, Rational(1)));
  CHECK((y * y) * y == TruncPoly(2));  // y^3 = 0
  const TruncPoly three_plus_y = poly2(Rational(3), Rational(1), Rational(0));
  CHECK(three_plus_y * three_plus_y ==
        poly2(Rational(9), Rational(6), Rational(1)));
}

TEST_CASE("mismatched truncation bounds are rejected") {
  CHECK_THROWS_AS(TruncPoly::y(2) + TruncPoly::y(3), std::invalid_argument);
  CHECK_THROWS_AS(TruncPoly::y(2) * TruncPoly::y(3), std::invalid_argument);
}

TEST_CASE("integer powers") {
  const TruncPoly one_plus_y = poly2(Rational(1), Rational(1), Rational(0));
  CHECK(one_plus_y.pow(2) == poly2(Rational(1), Rational(2), Rational(1)));
  CHECK(one_plus_y.pow(-1) == poly2(Rational(1), Rational(-1), Rational(1)));
  CHECK(one_plus_y.pow(0) == TruncPoly::constant(2, Rational(1)));

  const TruncPoly f = poly2(Rational(1), Rational(1, 3), Rational(0));
  CHECK(f.pow(8) == poly2(Rational(1), Rational(8, 3), Rational(28, 9)));
}

TEST_CASE("inverse requires a unit constant term") {
  CHECK_THROWS_AS(TruncPoly::y(2).inverse(), std::invalid_argument);
  CHECK_THROWS_AS(TruncPoly::y(2).pow(-2), std::invalid_argument);
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    TruncPoly p = testutil::random_poly(rng, 4);
    if (p[0] == 0) p.set(0, Rational(1));
    CHECK(p * p.inverse() == TruncPoly::constant(4, Rational(1)));
  }
}

TEST_CASE("pow is additive in the exponent") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 30; ++iter) {
    TruncPoly p = testutil::random_poly(rng, 4);
    if (p[0] == 0) p.set(0, Rational(2));
    for (long a = -5; a <= 5; a += 3) {
      for (long b = -5; b <= 5; b += 2) {
        CHECK(p.pow(a + b) == p.pow(a) * p.pow(b));
      }
    }
  }
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t t = 1 + rng() % 6;
    const TruncPoly a = testutil::random_poly(rng, t);
    const TruncPoly b = testutil::random_poly(rng, t);
    const TruncPoly c = testutil::random_poly(rng, t);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == TruncPoly(t));
  }
}

TEST_CASE("mu basis elements") {
  CHECK(mu_poly(1, 2) == TruncPoly::y(2));
  CHECK(mu_poly(2, 2) ==
        TruncPoly::from_coeffs(2, {Rational(0), Rational(4), Rational(1)}));
  CHECK(mu_poly(3, 3) == TruncPoly::from_coeffs(
                             3, {Rational(0), Rational(9), Rational(6), Rational(1)}));
  CHECK(mu_poly(3, 2) ==
        TruncPoly::from_coeffs(2, {Rational(0), Rational(9), Rational(6)}));
}

TEST_CASE("mu_s is integral, reduced, monic for s <= t <= 12") {
  for (std::size_t t = 1; t <= 12; ++t) {
    for (std::size_t s = 1; s <= t; ++s) {
      const TruncPoly mu = mu_poly(s, t);
      CHECK(mu.has_integer_coeffs());
      CHECK(mu.reduced());
      CHECK(mu[s] == Rational(1));
    }
  }
}

TEST_CASE("monomial-to-mu coordinates") {
  CHECK(monomial_to_mu(1, 3) == std::vector<BigInt>{BigInt(1)});
  CHECK(monomial_to_mu(2, 3) == std::vector<BigInt>{BigInt(-4), BigInt(1)});
  CHECK(monomial_to_mu(3, 3) ==
        std::vector<BigInt>{BigInt(15), BigInt(-6), BigInt(1)});
  CHECK_THROWS_AS(monomial_to_mu(4, 3), std::invalid_argument);
}

TEST_CASE("mu coordinates reconstruct the monomial exactly, t <= 12") {
  for (std::size_t t = 1; t <= 12; ++t) {
    for (std::size_t n = 1; n <= t; ++n) {
      const auto c = monomial_to_mu(n, t);
      TruncPoly acc(t);
      for (std::size_t s = 1; s <= n; ++s) {
        acc = acc + mu_poly(s, t).scaled(Rational(c[s - 1]));
      }
      CHECK(acc == TruncPoly::monomial(t, n, Rational(1)));
    }
  }
}

TEST_CASE("rendering") {
  CHECK(TruncPoly(3).str() == "0");
  CHECK(TruncPoly::from_coeffs(2, {Rational(0), Rational(9), Rational(6)}).str() ==
        "9y + 6y^2");
  CHECK(TruncPoly::from_coeffs(2, {Rational(1), Rational(1, 3)}).str() ==
        "1 + y/3");
  CHECK(TruncPoly::from_coeffs(2, {Rational(1), Rational(0), Rational(-1, 3)}).str() ==
        "1 - y^2/3");
  CHECK(TruncPoly::from_coeffs(3, {Rational(0), Rational(-1), Rational(0), Rational(2, 5)})
            .str() == "-y + 2y^3/5");
}

TEST_CASE("coefficient strings round trip") {
  std::mt19937_64 rng(19);
  for (int iter = 0; iter < 50; ++iter) {
    const TruncPoly p = testutil::random_poly(rng, 5);
    CHECK(TruncPoly::from_strings(5, p.coeff_strings()) == p);
  }
}
