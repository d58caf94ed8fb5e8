#pragma once

#include <cstddef>
#include <vector>

#include "jocp/rational.hpp"

namespace jocp {

using IntMatrix = std::vector<std::vector<BigInt>>;

struct SNFResult {
  IntMatrix left;                // U, unimodular
  IntMatrix right;               // V, unimodular
  std::vector<BigInt> diagonal;  // d_1 | d_2 | ..., nonnegative
};

// Smith normal form with transform tracking: U * A * V = diag(d). Pivoting is
// deterministic (smallest nonzero absolute value, ties broken by lowest row
// then column index) so the transforms are reproducible.
SNFResult smith_normal_form(const IntMatrix& a);

IntMatrix identity_matrix(std::size_t n);
std::vector<BigInt> mat_vec(const IntMatrix& a, const std::vector<BigInt>& v);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

}  // namespace jocp
