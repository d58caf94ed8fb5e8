#pragma once

#include <string>

#include "jocp/rational.hpp"

namespace jocp {

// p-adic valuation value: a signed integer, or the infinite value nu_p(0).
// Infinity compares greater than every finite value.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(true, 0); }
  static Valuation of(long v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  long value() const;  // throws std::logic_error when infinite

  bool operator==(const Valuation& o) const {
    return infinite_ == o.infinite_ && (infinite_ || v_ == o.v_);
  }
  bool operator<(const Valuation& o) const {
    if (infinite_) return false;
    if (o.infinite_) return true;
    return v_ < o.v_;
  }
  bool operator>(const Valuation& o) const { return o < *this; }
  bool operator<=(const Valuation& o) const { return !(o < *this); }
  bool operator>=(const Valuation& o) const { return !(*this < o); }

  std::string str() const;

 private:
  Valuation(bool inf, long v) : infinite_(inf), v_(v) {}
  bool infinite_;
  long v_;
};

// nu_p: exponent of the prime p in x; nu_p(0) is infinite, and the value is
// negative when p divides the denominator.
Valuation nu(long p, const BigInt& x);
Valuation nu(long p, const Rational& x);

// x lies in Z_(p), i.e. nu(p, x) >= 0.
bool is_p_local(long p, const Rational& x);

}  // namespace jocp
