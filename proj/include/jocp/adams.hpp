#pragma once

#include <cstddef>
#include <vector>

#include "jocp/local_context.hpp"
#include "jocp/trunc_poly.hpp"

namespace jocp {

using RationalMatrix = std::vector<std::vector<Rational>>;

// b_0..b_q with psi^k(y) = y * (sum_j b_j y^j)^2 for odd k = 2q + 1:
// b_j = k/(2j+1) * binom(q+j, 2j). Observed integral for small k, but kept
// rational; nothing downstream assumes integrality.
std::vector<Rational> bott_coefficients(long k);

// psi^k(y), truncated. The y-coefficient is k^2.
TruncPoly psi_y(long k, std::size_t bound);

// Ring-endomorphism image sum_r p_r * psi^k(y)^r; p must be reduced.
TruncPoly psi_apply(long k, const TruncPoly& p);

// C_{j,r}: coefficient of y^{r+j} in psi^k(y)^r before truncation, computed
// by 2r-fold convolution of the b-list. Zero for j > 2rq.
Rational c_coefficient(long k, std::size_t j, std::size_t r);

// t x t lower-triangular matrix of (1 - psi^k) on coordinates (a_1..a_t):
// entry (r,r) = 1 - k^{2r}; entry (r,i) = -C_{r-i,i} for j_r <= i < r with
// j_r = floor((r-1)/k) + 1; zero elsewhere.
RationalMatrix one_minus_psi_matrix(long k, std::size_t t);

std::vector<Rational> apply_matrix(const RationalMatrix& a,
                                   const std::vector<Rational>& v);

// theta_k on the basis element mu_s: (1/k) * sum_j b_j * mu_s^j, an element
// of 1 + reduced part with constant term exactly 1.
TruncPoly theta_mu(long k, std::size_t bound, std::size_t s);

// Exponential extension of theta_k to an integer-coefficient reduced p:
// product over s of theta_mu(s)^{e_s} where e_s are the mu-basis exponents
// of p. Every output denominator is a power of k (checked at runtime).
TruncPoly theta_apply(long k, const TruncPoly& p);

}  // namespace jocp
