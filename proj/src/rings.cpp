#include "heckealg/rings.hpp"

namespace heckealg {

RingSpec RingSpec::parse(const std::string& s) {
  if (s == "laurent") return laurent();
  if (s == "qv") return rational_function();
  const std::string qrat = "q_rat:v=";
  if (s.rfind(qrat, 0) == 0) {
    return rationals_at(parse_rat(s.substr(qrat.size())));
  }
  const std::string gfp = "gfp:p=";
  if (s.rfind(gfp, 0) == 0) {
    std::string rest = s.substr(gfp.size());
    auto comma = rest.find(",v=");
    if (comma == std::string::npos)
      throw std::invalid_argument("RingSpec::parse: expected gfp:p=P,v=R in '" + s + "'");
    long p, v;
    try {
      p = std::stol(rest.substr(0, comma));
      v = std::stol(rest.substr(comma + 3));
    } catch (const std::exception&) {
      throw std::invalid_argument("RingSpec::parse: bad integers in '" + s + "'");
    }
    return prime_field(p, v);
  }
  throw std::invalid_argument("RingSpec::parse: unknown ring '" + s + "'");
}

std::string RingSpec::str() const {
  switch (tag) {
    case Tag::laurent: return "laurent";
    case Tag::rational_function: return "qv";
    case Tag::rationals_at_q: return "q_rat:v=" + rat_str(v_value);
    case Tag::prime_field_at_q:
      return "gfp:p=" + std::to_string(p) + ",v=" + std::to_string(v_res);
  }
  throw std::logic_error("RingSpec::str: bad tag");
}

// The algebra over a field is semisimple unless q is a primitive e-th root
// of unity with e <= n (q != 1), or q = 1 and the field characteristic is a
// prime <= n.
SemisimpleVerdict hecke_semisimple_rational_q(const Rat& q, int n) {
  if (q == 0) throw std::invalid_argument("hecke_semisimple_rational_q: q must be invertible");
  if (q == 1) return {true, "q = 1 in characteristic 0"};
  if (q == -1) {
    if (n >= 2) return {false, "q = -1 is a primitive 2nd root of unity and 2 <= n"};
    return {true, "q = -1 but n < 2"};
  }
  return {true, "q has infinite multiplicative order"};
}

SemisimpleVerdict hecke_semisimple_gfp_q(long p, long q_residue, int n) {
  if (!is_prime(p)) throw std::invalid_argument("hecke_semisimple_gfp_q: p must be prime");
  GFpElem q(p, q_residue);
  if (q.is_zero()) throw std::invalid_argument("hecke_semisimple_gfp_q: q must be invertible");
  if (q == GFpElem(p, 1)) {
    if (p <= n) return {false, "q = 1 and characteristic " + std::to_string(p) + " <= n"};
    return {true, "q = 1 and characteristic " + std::to_string(p) + " > n"};
  }
  long e = 1;
  GFpElem acc = q;
  while (acc != GFpElem(p, 1)) {
    acc *= q;
    ++e;
  }
  if (e <= n)
    return {false, "q has multiplicative order " + std::to_string(e) + " <= n"};
  return {true, "q has multiplicative order " + std::to_string(e) + " > n"};
}

SemisimpleVerdict is_semisimple(const RingSpec& spec, int n) {
  switch (spec.tag) {
    case RingSpec::Tag::laurent:
      throw std::invalid_argument("is_semisimple: ring must be a field");
    case RingSpec::Tag::rational_function:
      return {true, "q = v^2 is transcendental over Q"};
    case RingSpec::Tag::rationals_at_q:
      return hecke_semisimple_rational_q(spec.v_value * spec.v_value, n);
    case RingSpec::Tag::prime_field_at_q: {
      GFpElem q = GFpElem(spec.p, spec.v_res) * GFpElem(spec.p, spec.v_res);
      return hecke_semisimple_gfp_q(spec.p, q.value(), n);
    }
  }
  throw std::logic_error("is_semisimple: bad tag");
}

}  // namespace heckealg
