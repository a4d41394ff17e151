#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace heckealg {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// exact quotient a/b; throws if b == 0 or b does not divide a
inline Int int_divexact(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("int_divexact: division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw std::domain_error("int_divexact: not divisible");
  Int r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// base^e for possibly negative e; base must be nonzero when e < 0
inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e > 0) return Rat(0);
    throw std::domain_error("rat_pow: zero base with negative exponent");
  }
  Rat b = base;
  long k = e;
  if (k < 0) {
    b = Rat(1) / b;
    k = -k;
  }
  Rat r(1);
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

// accepts "a" or "a/b" with optional sign, arbitrary precision
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("parse_rat: cannot parse '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// number of limbs, used as a size proxy when choosing elimination pivots
inline long int_size(const Int& a) {
  return static_cast<long>(mpz_size(a.get_mpz_t()));
}

}  // namespace heckealg
