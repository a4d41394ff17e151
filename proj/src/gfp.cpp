#include "heckealg/gfp.hpp"

namespace heckealg {

bool is_prime(long p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

GFpElem GFpElem::inverse() const {
  if (p_ == 0) throw std::logic_error("GFpElem: unset modulus");
  if (v_ == 0) throw std::domain_error("GFpElem::inverse: division by zero");
  // extended Euclid on (v, p)
  long a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    long q = a / b;
    long t = a - q * b; a = b; b = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
  }
  return GFpElem(p_, x0);
}

GFpElem GFpElem::pow(long e) const {
  if (p_ == 0) throw std::logic_error("GFpElem: unset modulus");
  GFpElem base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  GFpElem r(p_, 1);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace heckealg
