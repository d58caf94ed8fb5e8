#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jocp/jorder.hpp"
#include "jocp/snf.hpp"

namespace jocp {

// Finite abelian group given by its invariant factors d_1 | d_2 | ...,
// every factor > 1; the trivial group is the empty list.
struct FinAbGroup {
  std::vector<BigInt> invariant_factors;

  bool trivial() const { return invariant_factors.empty(); }
  BigInt order() const;
  std::string str() const;  // "Z/2 ⊕ Z/2880", "trivial"
  std::vector<std::string> factor_strings() const;
};

// Row-scaled integer copy of a rational matrix: mat[r] = row_scale[r] * a[r]
// with each scale a p-unit. Throws std::domain_error when a row's common
// denominator is divisible by p (no silent rounding).
struct ScaledIntMatrix {
  IntMatrix mat;
  std::vector<BigInt> row_scale;
};
ScaledIntMatrix integerize_rows(const RationalMatrix& a, long p);

// p-local J-group of CP^m: p-parts of the SNF diagonal of the
// (1 - psi^{k_p}) matrix, trivial factors dropped.
FinAbGroup jo_local_group(long p, long m);

// One local group per prime p <= m+1, primes ascending.
std::vector<std::pair<long, FinAbGroup>> jo_local_groups(long m);

// Direct sum of the locals renormalized to an invariant-factor chain.
FinAbGroup combine_local_groups(
    const std::vector<std::pair<long, FinAbGroup>>& locals);
FinAbGroup jo_group(long m);

// Independent order oracle: nu_p of the element's order in the p-local
// quotient lattice, read off the SNF coordinates
// max_i(nu_p(d_i) - nu_p((U w)_i), 0).
long valuation_snf(long p, const ElementSpec& spec);

// True iff the element is hit by (1 - psi^{k_p}) over Z_(p): every
// forward-substitution solution a_r = M_r / prod(1 - k^{2l}) is p-local.
bool in_psi_image(long p, const ElementSpec& spec);

}  // namespace jocp
