#include "heckealg/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace heckealg {

void LaurentPoly::normalize() {
  size_t lo = 0, hi = coeffs_.size();
  while (lo < hi && coeffs_[lo] == 0) ++lo;
  while (hi > lo && coeffs_[hi - 1] == 0) --hi;
  if (lo == hi) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  if (lo > 0 || hi < coeffs_.size()) {
    std::vector<Int> trimmed(coeffs_.begin() + static_cast<long>(lo),
                             coeffs_.begin() + static_cast<long>(hi));
    coeffs_ = std::move(trimmed);
    min_exp_ += static_cast<long>(lo);
  }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long lo = std::min(a.min_exp_, b.min_exp_);
  long hi = std::max(a.max_exp(), b.max_exp());
  LaurentPoly r;
  r.min_exp_ = lo;
  r.coeffs_.assign(static_cast<size_t>(hi - lo + 1), Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    r.coeffs_[static_cast<size_t>(a.min_exp_ - lo) + i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i)
    r.coeffs_[static_cast<size_t>(b.min_exp_ - lo) + i] += b.coeffs_[i];
  r.normalize();
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  LaurentPoly r;
  r.min_exp_ = a.min_exp_ + b.min_exp_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.normalize();
  return r;
}

std::strong_ordering LaurentPoly::operator<=>(const LaurentPoly& o) const {
  if (min_exp_ != o.min_exp_) return min_exp_ <=> o.min_exp_;
  if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() <=> o.coeffs_.size();
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    int c = mpz_cmp(coeffs_[i].get_mpz_t(), o.coeffs_[i].get_mpz_t());
    if (c != 0) return c <=> 0;
  }
  return std::strong_ordering::equal;
}

LaurentPoly::Unit LaurentPoly::unit_part() const {
  if (!is_unit()) throw std::domain_error("unit_part: not a unit: " + str());
  return Unit{coeffs_[0] > 0 ? 1 : -1, min_exp_};
}

Int LaurentPoly::content() const {
  Int g(0);
  for (const auto& c : coeffs_) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::primitive_part() const {
  if (is_zero()) return *this;
  Int g = content();
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = int_divexact(c, g);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Int& c, long k) const {
  if (c == 0 || is_zero()) return LaurentPoly();
  LaurentPoly r = *this;
  r.min_exp_ += k;
  if (c != 1)
    for (auto& x : r.coeffs_) x *= c;
  return r;
}

LaurentPoly LaurentPoly::divexact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("LaurentPoly::divexact: division by zero");
  if (a.is_zero()) return LaurentPoly();
  // long division from the top; exactness forces each leading quotient step
  std::vector<Int> rem = a.coeffs_;
  const std::vector<Int>& d = b.coeffs_;
  if (rem.size() < d.size())
    throw std::domain_error("LaurentPoly::divexact: not divisible");
  std::vector<Int> q(rem.size() - d.size() + 1, Int(0));
  const Int& lead = d.back();
  for (size_t k = q.size(); k-- > 0;) {
    Int& top = rem[k + d.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::domain_error("LaurentPoly::divexact: not divisible");
    Int c = int_divexact(top, lead);
    q[k] = c;
    for (size_t j = 0; j < d.size(); ++j) rem[k + j] -= c * d[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::domain_error("LaurentPoly::divexact: not divisible");
  return from_coeffs(a.min_exp_ - b.min_exp_, std::move(q));
}

namespace {

// pseudo-remainder of u by w in Z[v], both nonzero, deg u >= deg w;
// result equals lc(w)^k * u mod w for some k >= 0
std::vector<Int> pseudo_rem(std::vector<Int> u, const std::vector<Int>& w) {
  const Int& lw = w.back();
  while (u.size() >= w.size()) {
    Int lu = u.back();
    size_t off = u.size() - w.size();
    for (size_t j = 0; j + 1 < u.size(); ++j) {
      u[j] *= lw;
      if (j >= off) u[j] -= lu * w[j - off];
    }
    u.pop_back();
    while (!u.empty() && u.back() == 0) u.pop_back();
    if (u.empty()) break;
  }
  return u;
}

void make_primitive(std::vector<Int>& u) {
  Int g(0);
  for (const auto& c : u) {
    g = int_gcd(g, c);
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& c : u) c = int_divexact(c, g);
}

}  // namespace

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  auto canonical = [](const LaurentPoly& p) {
    if (p.is_zero()) return LaurentPoly();
    LaurentPoly r = p;
    r.min_exp_ = 0;
    if (r.coeffs_.back() < 0)
      for (auto& c : r.coeffs_) c = -c;
    return r;
  };
  if (a.is_zero()) return canonical(b);
  if (b.is_zero()) return canonical(a);
  Int cg = int_gcd(a.content(), b.content());
  std::vector<Int> u = a.primitive_part().coeffs_;
  std::vector<Int> w = b.primitive_part().coeffs_;
  if (u.size() < w.size()) std::swap(u, w);
  // primitive PRS; coefficient growth is tamed by the content strip each round
  while (!w.empty()) {
    std::vector<Int> r = pseudo_rem(u, w);
    make_primitive(r);
    u = std::move(w);
    w = std::move(r);
  }
  LaurentPoly g = from_coeffs(0, std::move(u));
  g = g.scaled(cg, 0);
  return canonical(g);
}

std::pair<long, long> LaurentPoly::pivot_weight() const {
  long bits = 0;
  for (const auto& c : coeffs_) bits += int_size(c);
  return {span(), bits};
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    long e = min_exp_ + static_cast<long>(i);
    Int ab = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (ab != 1 || e == 0) os << ab.get_str();
    if (e != 0) {
      if (ab != 1) os << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace heckealg
