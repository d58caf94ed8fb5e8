#include "jocp/sweep.hpp"

namespace jocp {

std::vector<std::vector<BigInt>> sweep_specs(long m, int n_random,
                                             std::mt19937_64& rng,
                                             long coeff_bound) {
  const std::size_t t = static_cast<std::size_t>(m / 2);
  std::vector<std::vector<BigInt>> out;
  out.reserve(t + static_cast<std::size_t>(n_random));
  for (std::size_t n = 1; n <= t; ++n) {
    std::vector<BigInt> mono(t, BigInt(0));
    mono[n - 1] = 1;
    out.push_back(std::move(mono));
  }
  // rng() modulo keeps the draw sequence identical across platforms; the
  // tiny modulo bias is irrelevant for a test grid.
  const unsigned long span = static_cast<unsigned long>(2 * coeff_bound + 1);
  for (int i = 0; i < n_random; ++i) {
    std::vector<BigInt> coeffs(t);
    for (std::size_t j = 0; j < t; ++j) {
      coeffs[j] = static_cast<long>(rng() % span) - coeff_bound;
    }
    out.push_back(std::move(coeffs));
  }
  return out;
}

std::vector<AgreementCase> agreement_grid(long max_m, int n_random,
                                          unsigned long seed,
                                          long coeff_bound) {
  std::vector<AgreementCase> out;
  std::mt19937_64 rng(seed);
  for (long m = 2; m <= max_m; m += 2) {
    const auto specs = sweep_specs(m, n_random, rng, coeff_bound);
    for (long p : primes_up_to(m + 1)) {
      for (const auto& coeffs : specs) {
        out.push_back(AgreementCase{m, p, coeffs});
      }
    }
  }
  return out;
}

AgreementOutcome evaluate_case(const AgreementCase& c) {
  AgreementOutcome o;
  try {
    const ElementSpec spec = ElementSpec::make(c.m, c.coeffs);
    const LocalContext ctx = make_context(c.p);
    o.v_psi = valuation_psi(ctx, spec);
    o.v_theta = valuation_theta(ctx, spec, theta_cap_default(ctx, spec));
    o.v_snf = valuation_snf(c.p, spec);
  } catch (const std::exception&) {
    o.error = true;
  }
  return o;
}

std::vector<AgreementOutcome> run_agreement_serial(
    const std::vector<AgreementCase>& cases) {
  std::vector<AgreementOutcome> out(cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i) {
    out[i] = evaluate_case(cases[i]);
  }
  return out;
}

std::vector<AgreementOutcome> run_agreement_parallel(
    const std::vector<AgreementCase>& cases) {
  std::vector<AgreementOutcome> out(cases.size());
  const long n = static_cast<long>(cases.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = evaluate_case(cases[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::size_t count_disagreements(const std::vector<AgreementOutcome>& outcomes) {
  std::size_t n = 0;
  for (const auto& o : outcomes) {
    if (!o.agree()) ++n;
  }
  return n;
}

}  // namespace jocp
