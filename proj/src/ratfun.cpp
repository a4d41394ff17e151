#include "heckealg/ratfun.hpp"

namespace heckealg {

RationalFunction::RationalFunction(LaurentPoly n, LaurentPoly d)
    : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  LaurentPoly g = LaurentPoly::gcd(num_, den_);
  if (!(g == LaurentPoly(1))) {
    num_ = LaurentPoly::divexact(num_, g);
    den_ = LaurentPoly::divexact(den_, g);
  }
  // push the denominator's v-power and sign into the numerator
  long shift = den_.min_exp();
  int sign = den_.coeffs().back() > 0 ? 1 : -1;
  if (shift != 0 || sign < 0) {
    den_ = den_.scaled(Int(sign), -shift);
    num_ = num_.scaled(Int(sign), -shift);
  }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  // cross-reduce first to keep intermediate products small
  RationalFunction x(a.num_, b.den_), y(b.num_, a.den_);
  RationalFunction r;
  r.num_ = x.num_ * y.num_;
  r.den_ = x.den_ * y.den_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("RationalFunction::inverse: division by zero");
  return RationalFunction(den_, num_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RationalFunction::str() const {
  if (den_ == LaurentPoly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace heckealg
