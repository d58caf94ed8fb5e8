// Acceptance suite: one pass/fail line per criterion, zero tolerance on every
// equality (all arithmetic exact). Exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include "jocp/cli.hpp"
#include "jocp/sweep.hpp"

using namespace jocp;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass,
            const std::string& detail = "") {
  std::printf("%s  criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", index,
              name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

ElementSpec spec_of(long m, std::vector<long> coeffs) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return ElementSpec::make(m, std::move(big));
}

// 1. The J-group of CP^4 is exactly Z/2 + Z/64 + Z/9 + Z/5, through the CLI.
void criterion_1() {
  std::ostringstream out, err;
  const int code = cli::run({"group", "--m", "4"}, out, err);
  const bool pass = code == 0 && out.str() == "Z/2 + Z/64 + Z/9 + Z/5\n";
  report(1, "group --m 4 lists summands Z/2, Z/64, Z/9, Z/5", pass,
         pass ? "" : ("got '" + out.str() + "'"));
}

// 2. nu_2 of the orders of y and y^2 on CP^4 (orders 64 and 16): exponents
// 6 and 4, by all three engines independently.
void criterion_2() {
  bool pass = true;
  std::string detail;
  const LocalContext ctx = make_context(2);
  const struct {
    std::vector<long> coeffs;
    long expected;
  } cases[] = {{{1, 0}, 6}, {{0, 1}, 4}};
  for (const auto& c : cases) {
    const ElementSpec spec = spec_of(4, c.coeffs);
    const long v1 = valuation_psi(ctx, spec);
    const long v2 = valuation_theta(ctx, spec, theta_cap_default(ctx, spec));
    const long v3 = valuation_snf(2, spec);
    if (v1 != c.expected || v2 != c.expected || v3 != c.expected) {
      pass = false;
      detail = "psi=" + std::to_string(v1) + " theta=" + std::to_string(v2) +
               " snf=" + std::to_string(v3) +
               " expected=" + std::to_string(c.expected);
    }
  }
  report(2, "nu_2(order of y) = 6 and nu_2(order of y^2) = 4 on CP^4, "
            "three-way exact", pass, detail);
}

// 3. The relation 2y^2 - 40y lies in the image of (1 - psi^3) over Z_(2).
void criterion_3() {
  const bool pass = in_psi_image(2, spec_of(4, {-40, 2}));
  report(3, "2y^2 - 40y is trivial in the 2-local J-group of CP^4", pass);
}

// 4. Engine agreement over every even m <= 12, every prime p <= m+1, all
// monomials plus 50 seeded random elements with |m_i| <= 100.
void criterion_4() {
  const auto start = std::chrono::steady_clock::now();
  const auto grid = agreement_grid(12, 50, 20240501, 100);
  const auto outcomes = run_agreement_parallel(grid);
  const auto bad = count_disagreements(outcomes);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  char detail[128];
  std::snprintf(detail, sizeof(detail), "%zu cases, %zu disagreements, %.1fs",
                grid.size(), bad, secs);
  report(4, "formula agreement sweep (m <= 12, 50 random elements per m)",
         bad == 0, detail);
}

// 5. Closed forms: generator order formula vs the recursion, and the
// normalized-numerator valuation formula vs the recursion, p in {2,3}, t <= 12.
void criterion_5() {
  bool pass = true;
  std::string detail;
  for (long p : {2L, 3L}) {
    const LocalContext ctx = make_context(p);
    for (long t = 1; t <= 12 && pass; ++t) {
      for (long n = 1; n <= t && pass; ++n) {
        const long closed = monomial_valuation_closed(p, n, t);
        const long rec = valuation_psi(
            ctx, ElementSpec::monomial(2 * t, static_cast<std::size_t>(n)));
        if (closed != rec) {
          pass = false;
          detail = "generator p=" + std::to_string(p) + " n=" + std::to_string(n) +
                   " t=" + std::to_string(t);
        }
      }
    }
    for (long n = 1; n <= 12 && pass; ++n) {
      const auto mbar = normalized_m_values(ctx, n, 12);
      for (long r = n; r <= 12 && pass; ++r) {
        const Rational& value = mbar[static_cast<std::size_t>(r - n)];
        if (value == 0 ||
            !(nu(p, value) ==
              Valuation::of(normalized_m_valuation_closed(p, n, r)))) {
          pass = false;
          detail = "normalized p=" + std::to_string(p) + " n=" + std::to_string(n) +
                   " r=" + std::to_string(r);
        }
      }
    }
  }
  report(5, "closed forms match recursions for p in {2,3}, t <= 12", pass,
         detail);
}

// 6. Closed-form valuations equal direct big-integer valuations:
// nu_p(k^{2n}-1) for n <= 500 and the products for r <= 40, primes p <= 23.
void criterion_6() {
  bool pass = true;
  std::string detail;
  for (long p : primes_up_to(23)) {
    const LocalContext ctx = make_context(p);
    const BigInt k(ctx.k);
    for (long n = 1; n <= 500 && pass; ++n) {
      const BigInt direct = pow_ui(k, 2 * static_cast<unsigned long>(n)) - 1;
      if (!(nu(p, direct) == Valuation::of(nu_power_minus_one(ctx, n)))) {
        pass = false;
        detail = "single term p=" + std::to_string(p) + " n=" + std::to_string(n);
      }
    }
    for (long s = 1; s <= 40 && pass; ++s) {
      BigInt prod = 1;
      for (long r = s; r <= 40 && pass; ++r) {
        prod *= pow_ui(k, 2 * static_cast<unsigned long>(r)) - 1;
        if (!(nu(p, prod) == Valuation::of(nu_power_product(ctx, s, r)))) {
          pass = false;
          detail = "product p=" + std::to_string(p) + " s=" + std::to_string(s) +
                   " r=" + std::to_string(r);
        }
      }
    }
  }
  report(6, "valuation closed forms vs direct big-integer computation", pass,
         detail);
}

// 7. Operator identities, exact: psi^k psi^l = psi^{kl} (odd k,l <= 7,
// t <= 6); the exponential law for theta on random pairs; the character
// identity (k theta_k(y))^2 y = psi^k(y) for odd k <= 11, t <= 8.
void criterion_7() {
  bool pass = true;
  std::string detail;
  std::mt19937_64 rng(777);
  auto random_reduced = [&rng](std::size_t t, bool integral) {
    TruncPoly p(t);
    for (std::size_t i = 1; i <= t; ++i) {
      const long num = static_cast<long>(rng() % 19) - 9;
      if (integral) {
        p.set(i, Rational(num));
      } else {
        static const long dens[] = {1, 2, 3, 5};
        Rational c(num, dens[rng() % 4]);
        c.canonicalize();
        p.set(i, c);
      }
    }
    return p;
  };

  for (long k : {3L, 5L, 7L}) {
    for (long l : {3L, 5L, 7L}) {
      for (std::size_t t = 1; t <= 6 && pass; ++t) {
        for (int iter = 0; iter < 4 && pass; ++iter) {
          TruncPoly p = random_reduced(t, false);
          if (psi_apply(k, psi_apply(l, p)) != psi_apply(k * l, p)) {
            pass = false;
            detail = "psi composition k=" + std::to_string(k) +
                     " l=" + std::to_string(l);
          }
        }
      }
    }
  }
  for (long k : {3L, 5L, 7L}) {
    for (std::size_t t = 1; t <= 6 && pass; ++t) {
      for (int iter = 0; iter < 6 && pass; ++iter) {
        TruncPoly p = random_reduced(t, true);
        TruncPoly q = random_reduced(t, true);
        if (theta_apply(k, p + q) != theta_apply(k, p) * theta_apply(k, q)) {
          pass = false;
          detail = "exponential law k=" + std::to_string(k);
        }
      }
    }
  }
  for (long k : {3L, 5L, 7L, 9L, 11L}) {
    for (std::size_t t = 1; t <= 8 && pass; ++t) {
      const TruncPoly th = theta_apply(k, TruncPoly::y(t));
      const TruncPoly lhs =
          (th * th * TruncPoly::y(t)).scaled(Rational(BigInt(k) * k));
      if (lhs != psi_y(k, t)) {
        pass = false;
        detail = "character identity k=" + std::to_string(k) +
                 " t=" + std::to_string(t);
      }
    }
  }
  report(7, "operator identities (composition, exponential law, character)",
         pass, detail);
}

// 8. Valuations vanish at the two smallest primes above m+1 for every test
// element, m <= 12 (same seeded elements as criterion 4).
void criterion_8() {
  bool pass = true;
  std::string detail;
  std::mt19937_64 rng(20240501);
  for (long m = 2; m <= 12 && pass; m += 2) {
    const auto specs = sweep_specs(m, 50, rng, 100);
    const long p1 = next_prime(m + 1);
    const long p2 = next_prime(p1);
    for (long p : {p1, p2}) {
      const LocalContext ctx = make_context(p);
      for (const auto& coeffs : specs) {
        const long v = valuation_psi(ctx, ElementSpec::make(m, coeffs));
        if (v != 0) {
          pass = false;
          detail = "m=" + std::to_string(m) + " p=" + std::to_string(p) +
                   " v=" + std::to_string(v);
          break;
        }
      }
      if (!pass) break;
    }
  }
  report(8, "valuations vanish above m+1 (two smallest larger primes)", pass,
         detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::printf("%s (%d failure%s)\n", failures == 0 ? "ACCEPTED" : "REJECTED",
              failures, failures == 1 ? "" : "s");
  return failures;
}
