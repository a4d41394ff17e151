#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "heckealg/laurent.hpp"

namespace heckealg {

// element of Q(v) as a reduced fraction of integer Laurent polynomials;
// canonical form: denominator nonzero with min_exp 0 and positive leading
// coefficient, gcd(num, den) a unit, zero stored as 0/1
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(LaurentPoly(1)) {}
  RationalFunction(const LaurentPoly& n) : num_(n), den_(LaurentPoly(1)) {}
  explicit RationalFunction(long c) : num_(LaurentPoly(c)), den_(LaurentPoly(1)) {}
  RationalFunction(LaurentPoly n, LaurentPoly d);

  static RationalFunction v_power(long k) { return RationalFunction(LaurentPoly::v_power(k)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o) { *this = *this + o; return *this; }
  RationalFunction& operator-=(const RationalFunction& o) { *this = *this - o; return *this; }
  RationalFunction& operator*=(const RationalFunction& o) { *this = *this * o; return *this; }
  RationalFunction& operator/=(const RationalFunction& o) { *this = *this / o; return *this; }

  RationalFunction inverse() const;

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  // the underlying Laurent polynomial when the denominator is 1
  std::optional<LaurentPoly> as_laurent() const {
    if (den_ == LaurentPoly(1)) return num_;
    return std::nullopt;
  }

  std::pair<long, long> pivot_weight() const {
    auto [sn, bn] = num_.pivot_weight();
    auto [sd, bd] = den_.pivot_weight();
    return {sn + sd, bn + bd};
  }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.str();
  }

 private:
  void reduce();

  LaurentPoly num_, den_;
};

}  // namespace heckealg
