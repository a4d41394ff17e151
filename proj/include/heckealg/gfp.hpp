#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace heckealg {

bool is_prime(long p);

// element of the prime field Z/p; carries its modulus so mixed-modulus
// arithmetic is caught at runtime
class GFpElem {
 public:
  GFpElem() : p_(0), v_(0) {}
  GFpElem(long p, long value) : p_(p) {
    if (p < 2) throw std::invalid_argument("GFpElem: modulus must be >= 2");
    v_ = value % p;
    if (v_ < 0) v_ += p;
  }

  long p() const { return p_; }
  long value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend GFpElem operator+(const GFpElem& a, const GFpElem& b) {
    a.match(b);
    return GFpElem(a.p_, a.v_ + b.v_);
  }
  friend GFpElem operator-(const GFpElem& a, const GFpElem& b) {
    a.match(b);
    return GFpElem(a.p_, a.v_ - b.v_);
  }
  friend GFpElem operator*(const GFpElem& a, const GFpElem& b) {
    a.match(b);
    return GFpElem(a.p_, static_cast<long>(static_cast<__int128>(a.v_) * b.v_ % a.p_));
  }
  friend GFpElem operator/(const GFpElem& a, const GFpElem& b) { return a * b.inverse(); }
  GFpElem operator-() const { return GFpElem(p_, -v_); }
  GFpElem& operator+=(const GFpElem& o) { *this = *this + o; return *this; }
  GFpElem& operator-=(const GFpElem& o) { *this = *this - o; return *this; }
  GFpElem& operator*=(const GFpElem& o) { *this = *this * o; return *this; }

  GFpElem inverse() const;
  GFpElem pow(long e) const;

  bool operator==(const GFpElem& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(const GFpElem& o) const { return !(*this == o); }

  std::string str() const { return std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, const GFpElem& a) { return os << a.str(); }

 private:
  void match(const GFpElem& o) const {
    if (p_ != o.p_ || p_ == 0)
      throw std::logic_error("GFpElem: mismatched or unset modulus");
  }

  long p_, v_;
};

}  // namespace heckealg
