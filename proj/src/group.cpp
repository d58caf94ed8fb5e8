#include "jocp/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace jocp {

BigInt FinAbGroup::order() const {
  BigInt n = 1;
  for (const auto& d : invariant_factors) n *= d;
  return n;
}

std::string FinAbGroup::str() const {
  if (trivial()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) out += " ⊕ ";
    out += "Z/" + invariant_factors[i].get_str();
  }
  return out;
}

std::vector<std::string> FinAbGroup::factor_strings() const {
  std::vector<std::string> out;
  out.reserve(invariant_factors.size());
  for (const auto& d : invariant_factors) out.push_back(d.get_str());
  return out;
}

ScaledIntMatrix integerize_rows(const RationalMatrix& a, long p) {
  ScaledIntMatrix out;
  out.mat.reserve(a.size());
  out.row_scale.reserve(a.size());
  for (const auto& row : a) {
    BigInt scale = 1;
    for (const auto& x : row) {
      BigInt l;
      mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), x.get_den().get_mpz_t());
      scale = l;
    }
    if (scale % p == 0) {
      throw std::domain_error(
          "matrix row denominator is divisible by p; refusing to rescale");
    }
    std::vector<BigInt> int_row;
    int_row.reserve(row.size());
    for (const auto& x : row) int_row.push_back(to_integer(x * Rational(scale)));
    out.mat.push_back(std::move(int_row));
    out.row_scale.push_back(scale);
  }
  return out;
}

namespace {

void check_even_m(long m) {
  if (m < 2 || m % 2 != 0) {
    throw std::invalid_argument(
        "m must be an even integer >= 2 (odd complex dimension unsupported)");
  }
}

}  // namespace

FinAbGroup jo_local_group(long p, long m) {
  check_even_m(m);
  const LocalContext ctx = make_context(p);
  const std::size_t t = static_cast<std::size_t>(m / 2);
  const auto scaled = integerize_rows(one_minus_psi_matrix(ctx.k, t), p);
  const auto snf = smith_normal_form(scaled.mat);
  FinAbGroup g;
  for (const auto& d : snf.diagonal) {
    if (d == 0) {
      throw std::logic_error("singular operator matrix; nonzero determinant expected");
    }
    const long e = nu(p, d).value();
    if (e > 0) {
      g.invariant_factors.push_back(pow_ui(BigInt(p), static_cast<unsigned long>(e)));
    }
  }
  return g;
}

std::vector<std::pair<long, FinAbGroup>> jo_local_groups(long m) {
  check_even_m(m);
  std::vector<std::pair<long, FinAbGroup>> out;
  for (long p : primes_up_to(m + 1)) {
    out.emplace_back(p, jo_local_group(p, m));
  }
  return out;
}

FinAbGroup combine_local_groups(
    const std::vector<std::pair<long, FinAbGroup>>& locals) {
  std::size_t width = 0;
  for (const auto& [p, g] : locals) {
    width = std::max(width, g.invariant_factors.size());
  }
  FinAbGroup out;
  if (width == 0) return out;
  // Local factor lists are ascending chains; aligning them from the largest
  // factor down yields the global divisibility chain.
  std::vector<BigInt> chain(width, BigInt(1));
  for (const auto& [p, g] : locals) {
    const std::size_t offset = width - g.invariant_factors.size();
    for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) {
      chain[offset + i] *= g.invariant_factors[i];
    }
  }
  for (auto& d : chain) {
    if (d > 1) out.invariant_factors.push_back(std::move(d));
  }
  return out;
}

FinAbGroup jo_group(long m) { return combine_local_groups(jo_local_groups(m)); }

long valuation_snf(long p, const ElementSpec& spec) {
  const LocalContext ctx = make_context(p);
  const std::size_t t = spec.t();
  const auto scaled = integerize_rows(one_minus_psi_matrix(ctx.k, t), p);
  const auto snf = smith_normal_form(scaled.mat);

  // Coordinates of the element in the diagonalized quotient: the row scaling
  // is the automorphism applied to the target vector, then U.
  std::vector<BigInt> w(t);
  for (std::size_t i = 0; i < t; ++i) w[i] = scaled.row_scale[i] * spec.coeffs[i];
  const auto uw = mat_vec(snf.left, w);

  long best = 0;
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
    if (snf.diagonal[i] == 0) {
      throw std::logic_error("singular operator matrix; nonzero determinant expected");
    }
    if (uw[i] == 0) continue;
    const long cand = nu(p, snf.diagonal[i]).value() - nu(p, uw[i]).value();
    best = std::max(best, cand);
  }
  return best;
}

bool in_psi_image(long p, const ElementSpec& spec) {
  const LocalContext ctx = make_context(p);
  const auto m = m_values(ctx, spec);
  BigInt denom = 1;
  for (std::size_t r = 1; r <= spec.t(); ++r) {
    denom *= BigInt(1) - pow_ui(BigInt(ctx.k), 2 * static_cast<unsigned long>(r));
    const Rational a_r = m[r - 1] / Rational(denom);
    if (!is_p_local(p, a_r)) return false;
  }
  return true;
}

}  // namespace jocp
