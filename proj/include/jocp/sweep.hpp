#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "jocp/group.hpp"

namespace jocp {

// One cell of the cross-validation grid: an element of CP^m checked at one
// prime by all three engines.
struct AgreementCase {
  long m = 0;
  long p = 0;
  std::vector<BigInt> coeffs;
};

struct AgreementOutcome {
  long v_psi = -1;
  long v_theta = -1;
  long v_snf = -1;
  bool error = false;
  bool agree() const {
    return !error && v_psi == v_theta && v_theta == v_snf;
  }
};

// Coefficient vectors for one m: all t monomials followed by n_random vectors
// with entries drawn uniformly from [-coeff_bound, coeff_bound].
std::vector<std::vector<BigInt>> sweep_specs(long m, int n_random,
                                             std::mt19937_64& rng,
                                             long coeff_bound);

// Full grid over even m <= max_m crossed with every prime p <= m+1.
std::vector<AgreementCase> agreement_grid(long max_m, int n_random,
                                          unsigned long seed, long coeff_bound);

AgreementOutcome evaluate_case(const AgreementCase& c);

// Serial reference kernel; the OpenMP kernel must match it case for case.
std::vector<AgreementOutcome> run_agreement_serial(
    const std::vector<AgreementCase>& cases);
std::vector<AgreementOutcome> run_agreement_parallel(
    const std::vector<AgreementCase>& cases);

std::size_t count_disagreements(const std::vector<AgreementOutcome>& outcomes);

}  // namespace jocp
