#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "heckealg/bigint.hpp"

namespace heckealg {

// Laurent polynomial in v over Z, stored densely as a coefficient run
// starting at min_exp.  Canonical form: zero is {min_exp 0, no coeffs};
// otherwise the first and last stored coefficients are nonzero.
class LaurentPoly {
 public:
  LaurentPoly() : min_exp_(0) {}
  explicit LaurentPoly(long c) { if (c != 0) { min_exp_ = 0; coeffs_ = {Int(c)}; } }
  explicit LaurentPoly(const Int& c) { if (c != 0) { min_exp_ = 0; coeffs_ = {c}; } }

  // c * v^k
  static LaurentPoly term(const Int& c, long k) {
    LaurentPoly p;
    if (c != 0) { p.min_exp_ = k; p.coeffs_ = {c}; }
    return p;
  }
  static LaurentPoly v_power(long k) { return term(Int(1), k); }
  static LaurentPoly from_coeffs(long min_exp, std::vector<Int> coeffs) {
    LaurentPoly p;
    p.min_exp_ = min_exp;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  long min_exp() const { return min_exp_; }
  long max_exp() const { return min_exp_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int coeff(long k) const {
    if (coeffs_.empty() || k < min_exp_ || k > max_exp()) return Int(0);
    return coeffs_[static_cast<size_t>(k - min_exp_)];
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
  LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
  LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

  bool operator==(const LaurentPoly& o) const {
    return min_exp_ == o.min_exp_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // total order (for use as map keys): by min_exp, then coeff run
  std::strong_ordering operator<=>(const LaurentPoly& o) const;

  // (sign, exponent) when the value is +-v^k, nothing otherwise
  struct Unit { int sign; long exp; };
  bool is_unit() const { return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1); }
  Unit unit_part() const;

  // gcd of the absolute coefficient values; 0 for the zero polynomial
  Int content() const;
  LaurentPoly primitive_part() const;

  // multiply by c * v^k
  LaurentPoly scaled(const Int& c, long k) const;

  // exact quotient; throws std::domain_error when b is zero or does not divide a
  static LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b);

  // gcd normalized to min_exp 0 with positive leading coefficient;
  // includes the content gcd, so divexact by it is valid for both inputs
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  // exponent spread max_exp - min_exp; -1 for zero
  long span() const { return coeffs_.empty() ? -1 : static_cast<long>(coeffs_.size()) - 1; }

  // (span, coefficient limb total): smaller means a cheaper elimination pivot
  std::pair<long, long> pivot_weight() const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

 private:
  void normalize();

  long min_exp_ = 0;
  std::vector<Int> coeffs_;  // coeffs_[i] multiplies v^(min_exp_ + i)
};

}  // namespace heckealg
