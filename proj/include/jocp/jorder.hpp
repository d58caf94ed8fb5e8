#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "jocp/adams.hpp"
#include "jocp/valuation.hpp"

namespace jocp {

// The element m_1 y + m_2 y^2 + ... + m_t y^t of the reduced real K-theory
// of CP^m, m = 2t. Only even m is supported; odd m is rejected rather than
// silently reduced.
struct ElementSpec {
  long m = 0;
  std::vector<BigInt> coeffs;  // m_1..m_t

  static ElementSpec make(long m, std::vector<BigInt> coeffs);
  static ElementSpec monomial(long m, std::size_t n);  // y^n
  std::size_t t() const { return coeffs.size(); }
  bool is_zero() const;
  TruncPoly poly() const;
};

struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AgreementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerators M_1..M_t of the forward-substitution solution of the triangular
// system p^v * P = (1 - psi^k)(u), i.e. a_r = p^v M_r / prod_{l<=r}(1-k^{2l}):
//   M_1 = m_1,
//   M_r = sum_{i=j_r}^{r-1} C_{r-i,i} prod_{l=i+1}^{r-1}(1-k^{2l}) M_i
//         + m_r prod_{l=1}^{r-1}(1-k^{2l}).
std::vector<Rational> m_values(const LocalContext& ctx, const ElementSpec& spec);

// nu_p of the element's J-order, three independent engines. valuation_psi is
// the non-iterative default: max_r over M_r != 0 of
// nu_p(prod_{i<=r}(1-k^{2i})) - nu_p(M_r), clamped at 0.
long valuation_psi(const LocalContext& ctx, const ElementSpec& spec);

// Iterative engine: smallest v >= 0 such that theta_k(P)^{p^v} = 1 + sum a_r y^r
// admits u with p-integral series quotient psi(1+u)/(1+u). Per candidate v the
// L-recursion runs from the coefficients of theta^{p^v} and the test is
// nu_p(L_r) >= nu_p(prod_{l<=r}(k^{2l}-1)) for every r. Throws CapExceededError
// past v_cap.
long valuation_theta(const LocalContext& ctx, const ElementSpec& spec,
                     long v_cap);

// A-priori upper bound for v: nu_p of the full product, which bounds the
// p-part of the group exponent.
long theta_cap_default(const LocalContext& ctx, const ElementSpec& spec);

// Closed form for the monomial y^n on CP^{2t}:
// max{ s - floor(2(n-1)/(p-1)) + nu_p(s) } over floor(2n/(p-1)) <= s <=
// floor(2t/(p-1)). Proven for p in {2,3}; other primes only behind the
// experimental flag (conjectural, reported not asserted by callers).
long monomial_valuation_closed(long p, long n, long t, bool experimental = false);

// Closed form of nu_p(Mbar_r) for the normalized monomial recursion,
// p in {2,3}: sum_{s<=floor(2(r-1)/(p-1))} nu_p(s) - same sum at n-1.
long normalized_m_valuation_closed(long p, long n, long r);

// Normalized monomial recursion values Mbar_n..Mbar_t (Mbar_n = 1, and for
// r > n the C-weighted sum over max(j_r, n) <= i < r).
std::vector<Rational> normalized_m_values(const LocalContext& ctx, long n,
                                          long t);

struct JOrderReport {
  std::map<long, long> valuations;  // prime p <= m+1 -> nu_p
  BigInt order = 1;                 // prod p^{nu_p}
};

// Per-prime valuations over all primes p <= m+1 plus the assembled order.
// With cross_check set, every prime is recomputed by all three engines and
// any disagreement throws AgreementError.
JOrderReport full_jorder(const ElementSpec& spec, bool cross_check = false);

struct EngineValues {
  long psi = -1;
  long theta = -1;
  long snf = -1;
  bool agree() const { return psi == theta && theta == snf && psi >= 0; }
};
struct VerifiedReport {
  JOrderReport report;  // valuation_psi values
  std::map<long, EngineValues> engines;
  bool agree = false;
};

// Non-throwing three-engine run for display purposes.
VerifiedReport full_jorder_verified(const ElementSpec& spec);

}  // namespace jocp
