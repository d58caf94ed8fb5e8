#include "jocp/valuation.hpp"

#include <stdexcept>

namespace jocp {

long Valuation::value() const {
  if (infinite_) throw std::logic_error("infinite valuation has no value");
  return v_;
}

std::string Valuation::str() const {
  return infinite_ ? "inf" : std::to_string(v_);
}

Valuation nu(long p, const BigInt& x) {
  if (p < 2) throw std::invalid_argument("nu: p must be a prime");
  if (x == 0) return Valuation::infinite();
  BigInt pz(p), reduced;
  auto count = mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
  return Valuation::of(static_cast<long>(count));
}

Valuation nu(long p, const Rational& x) {
  if (x == 0) return Valuation::infinite();
  BigInt num = x.get_num();
  BigInt den = x.get_den();
  return Valuation::of(nu(p, num).value() - nu(p, den).value());
}

bool is_p_local(long p, const Rational& x) {
  return nu(p, x) >= Valuation::of(0);
}

}  // namespace jocp
