#pragma once

#include <string>
#include <utility>

#include "heckealg/bigint.hpp"
#include "heckealg/gfp.hpp"
#include "heckealg/laurent.hpp"
#include "heckealg/ratfun.hpp"

namespace heckealg {

// Coefficient rings share a small context interface used by the generic
// algebra code: constants, the image of v^k, exact division, and a pivot
// weight guiding elimination.  Elements themselves carry the arithmetic
// operators.  Every ring here makes v invertible, so v_power accepts
// negative exponents.

struct LaurentRing {
  using Elem = LaurentPoly;
  static constexpr bool is_field = false;
  std::string name() const { return "laurent"; }
  Elem zero() const { return LaurentPoly(); }
  Elem one() const { return LaurentPoly(1); }
  Elem from_int(long c) const { return LaurentPoly(c); }
  Elem v_power(long k) const { return LaurentPoly::v_power(k); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem divexact(const Elem& a, const Elem& b) const { return LaurentPoly::divexact(a, b); }
  Elem from_laurent(const LaurentPoly& a) const { return a; }
  std::pair<long, long> pivot_weight(const Elem& a) const { return a.pivot_weight(); }
  std::string str(const Elem& a) const { return a.str(); }
};

// plain integers; used internally as the cleared form of rational matrices
struct IntRing {
  using Elem = Int;
  static constexpr bool is_field = false;
  std::string name() const { return "int"; }
  Elem zero() const { return Int(0); }
  Elem one() const { return Int(1); }
  Elem from_int(long c) const { return Int(c); }
  Elem v_power(long) const { throw std::logic_error("IntRing has no distinguished v"); }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem divexact(const Elem& a, const Elem& b) const { return int_divexact(a, b); }
  std::pair<long, long> pivot_weight(const Elem& a) const { return {0, int_size(a)}; }
  std::string str(const Elem& a) const { return a.get_str(); }
};

struct RationalFunctionField {
  using Elem = RationalFunction;
  static constexpr bool is_field = true;
  std::string name() const { return "qv"; }
  Elem zero() const { return RationalFunction(); }
  Elem one() const { return RationalFunction(1); }
  Elem from_int(long c) const { return RationalFunction(c); }
  Elem v_power(long k) const { return RationalFunction::v_power(k); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem divexact(const Elem& a, const Elem& b) const { return a / b; }
  Elem from_laurent(const LaurentPoly& a) const { return RationalFunction(a); }
  std::pair<long, long> pivot_weight(const Elem& a) const { return a.pivot_weight(); }
  std::string str(const Elem& a) const { return a.str(); }
};

// Q with v specialized to a fixed nonzero rational
struct RationalAtQ {
  Rat v;
  explicit RationalAtQ(const Rat& value) : v(value) {
    if (v == 0) throw std::invalid_argument("RationalAtQ: v must be invertible");
  }
  using Elem = Rat;
  static constexpr bool is_field = true;
  std::string name() const { return "q_rat:v=" + rat_str(v); }
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(long c) const { return Rat(c); }
  Elem v_power(long k) const { return rat_pow(v, k); }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0) throw std::domain_error("RationalAtQ: division by zero");
    return a / b;
  }
  Elem divexact(const Elem& a, const Elem& b) const { return div(a, b); }
  Elem from_laurent(const LaurentPoly& a) const {
    Rat r(0);
    for (long k = a.min_exp(); !a.is_zero() && k <= a.max_exp(); ++k) {
      Int c = a.coeff(k);
      if (c != 0) r += Rat(c) * rat_pow(v, k);
    }
    return r;
  }
  std::pair<long, long> pivot_weight(const Elem& a) const {
    return {0, int_size(a.get_num()) + int_size(a.get_den())};
  }
  std::string str(const Elem& a) const { return rat_str(a); }
};

// GF(p) with v specialized to a fixed invertible residue
struct PrimeFieldAtQ {
  long p;
  long v_res;
  PrimeFieldAtQ(long p_, long v_) : p(p_), v_res(((v_ % p_) + p_) % p_) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeFieldAtQ: modulus must be prime");
    if (v_res == 0) throw std::invalid_argument("PrimeFieldAtQ: v must be invertible");
  }
  using Elem = GFpElem;
  static constexpr bool is_field = true;
  std::string name() const {
    return "gfp:p=" + std::to_string(p) + ",v=" + std::to_string(v_res);
  }
  Elem zero() const { return GFpElem(p, 0); }
  Elem one() const { return GFpElem(p, 1); }
  Elem from_int(long c) const { return GFpElem(p, c); }
  Elem v_power(long k) const { return GFpElem(p, v_res).pow(k); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem divexact(const Elem& a, const Elem& b) const { return a / b; }
  Elem from_laurent(const LaurentPoly& a) const {
    GFpElem r(p, 0);
    for (long k = a.min_exp(); !a.is_zero() && k <= a.max_exp(); ++k) {
      Int c = a.coeff(k);
      if (c != 0) {
        long res = static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p)));
        r += GFpElem(p, res) * v_power(k);
      }
    }
    return r;
  }
  std::pair<long, long> pivot_weight(const Elem& a) const { return {0, a.is_zero() ? 0 : 1}; }
  std::string str(const Elem& a) const { return a.str(); }
};

// runtime description of a coefficient ring, as given on the command line
// or in serialized data
struct RingSpec {
  enum class Tag { laurent, rational_function, rationals_at_q, prime_field_at_q };
  Tag tag = Tag::laurent;
  Rat v_value = Rat(1);  // rationals_at_q
  long p = 0;            // prime_field_at_q
  long v_res = 0;        // prime_field_at_q

  static RingSpec laurent() { return RingSpec{Tag::laurent, Rat(1), 0, 0}; }
  static RingSpec rational_function() { return RingSpec{Tag::rational_function, Rat(1), 0, 0}; }
  static RingSpec rationals_at(const Rat& v) {
    RationalAtQ check(v);
    return RingSpec{Tag::rationals_at_q, v, 0, 0};
  }
  static RingSpec prime_field(long p, long v) {
    PrimeFieldAtQ check(p, v);
    return RingSpec{Tag::prime_field_at_q, Rat(1), p, check.v_res};
  }

  bool is_field() const { return tag != Tag::laurent; }

  // "laurent" | "qv" | "q_rat:v=a/b" | "gfp:p=P,v=R"
  static RingSpec parse(const std::string& s);
  std::string str() const;

  bool operator==(const RingSpec& o) const {
    return tag == o.tag && v_value == o.v_value && p == o.p && v_res == o.v_res;
  }
};

// calls f with the ring context described by spec
template <class F>
decltype(auto) with_ring(const RingSpec& spec, F&& f) {
  switch (spec.tag) {
    case RingSpec::Tag::laurent:
      return f(LaurentRing{});
    case RingSpec::Tag::rational_function:
      return f(RationalFunctionField{});
    case RingSpec::Tag::rationals_at_q:
      return f(RationalAtQ(spec.v_value));
    case RingSpec::Tag::prime_field_at_q:
      return f(PrimeFieldAtQ(spec.p, spec.v_res));
  }
  throw std::logic_error("with_ring: bad tag");
}

// calls f only for ring contexts that are fields
template <class F>
decltype(auto) with_field(const RingSpec& spec, F&& f) {
  switch (spec.tag) {
    case RingSpec::Tag::rational_function:
      return f(RationalFunctionField{});
    case RingSpec::Tag::rationals_at_q:
      return f(RationalAtQ(spec.v_value));
    case RingSpec::Tag::prime_field_at_q:
      return f(PrimeFieldAtQ(spec.p, spec.v_res));
    case RingSpec::Tag::laurent:
      break;
  }
  throw std::invalid_argument("with_field: " + spec.str() + " is not a field");
}

struct SemisimpleVerdict {
  bool semisimple;
  std::string reason;
};

// the Hecke algebra of the symmetric group S_n over a characteristic-zero
// field with parameter q (here q is a rational number)
SemisimpleVerdict hecke_semisimple_rational_q(const Rat& q, int n);

// the same over GF(p) with parameter q given as a residue
SemisimpleVerdict hecke_semisimple_gfp_q(long p, long q_residue, int n);

// dispatch on a field spec, with q = v^2
SemisimpleVerdict is_semisimple(const RingSpec& spec, int n);

}  // namespace heckealg
