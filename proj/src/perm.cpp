#include "heckealg/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace heckealg {

Permutation::Permutation(int n) {
  if (n < 1) throw std::invalid_argument("Permutation: n must be >= 1");
  img_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img_[static_cast<size_t>(i)] = i + 1;
}

Permutation Permutation::from_one_line(std::vector<int> images) {
  int n = static_cast<int>(images.size());
  if (n < 1) throw std::invalid_argument("Permutation: empty one-line form");
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int x : images) {
    if (x < 1 || x > n || seen[static_cast<size_t>(x)])
      throw std::invalid_argument("Permutation: not a bijection on 1..n");
    seen[static_cast<size_t>(x)] = 1;
  }
  Permutation w;
  w.img_ = std::move(images);
  return w;
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("Permutation::transposition: need 1 <= i < n");
  Permutation w(n);
  std::swap(w.img_[static_cast<size_t>(i - 1)], w.img_[static_cast<size_t>(i)]);
  return w;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation w(n());
  for (int i = 1; i <= n(); ++i) w.img_[static_cast<size_t>((*this)(i) - 1)] = i;
  return w;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("Permutation: mismatched n");
  Permutation w(a.n());
  for (int i = 1; i <= a.n(); ++i) w.img_[static_cast<size_t>(i - 1)] = b(a(i));
  return w;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 1; i <= n(); ++i)
    for (int j = i + 1; j <= n(); ++j)
      if ((*this)(i) > (*this)(j)) ++inv;
  return inv;
}

bool Permutation::right_descent(int i) const {
  if (i < 1 || i >= n()) throw std::out_of_range("right_descent: need 1 <= i < n");
  // ws_i swaps the values i, i+1; length drops iff i+1 sits left of i
  int pos_i = 0, pos_i1 = 0;
  for (int j = 1; j <= n(); ++j) {
    if ((*this)(j) == i) pos_i = j;
    if ((*this)(j) == i + 1) pos_i1 = j;
  }
  return pos_i1 < pos_i;
}

Permutation Permutation::times_s(int i) const {
  if (i < 1 || i >= n()) throw std::out_of_range("times_s: need 1 <= i < n");
  Permutation w = *this;
  for (auto& x : w.img_) {
    if (x == i) x = i + 1;
    else if (x == i + 1) x = i;
  }
  return w;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation u = *this;
  while (!u.is_identity()) {
    int i = 1;
    while (!u.right_descent(i)) ++i;
    word.push_back(i);
    u = u.times_s(i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Permutation Permutation::from_cycles(const std::string& s, int n) {
  if (n < 1) throw std::invalid_argument("from_cycles: n must be >= 1");
  Permutation result(n);
  size_t pos = 0;
  auto skip_space = [&] { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; };
  skip_space();
  bool any = false;
  while (pos < s.size()) {
    if (s[pos] != '(') throw std::invalid_argument("from_cycles: expected '(' in '" + s + "'");
    ++pos;
    std::vector<int> cycle;
    std::string digits;
    while (pos < s.size() && s[pos] != ')') {
      char c = s[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        // compact form: each digit its own point as long as n <= 9
        if (n <= 9) {
          cycle.push_back(c - '0');
          digits.clear();
        }
      } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        if (!digits.empty()) {
          cycle.push_back(std::stoi(digits));
          digits.clear();
        }
      } else {
        throw std::invalid_argument("from_cycles: unexpected character in '" + s + "'");
      }
      ++pos;
    }
    if (pos >= s.size()) throw std::invalid_argument("from_cycles: missing ')' in '" + s + "'");
    ++pos;
    if (!digits.empty()) cycle.push_back(std::stoi(digits));
    if (cycle.empty()) throw std::invalid_argument("from_cycles: empty cycle in '" + s + "'");
    for (int x : cycle)
      if (x < 1 || x > n) throw std::invalid_argument("from_cycles: point out of range in '" + s + "'");
    // apply the cycle: each point maps to the next one around
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    for (size_t k = 0; k < cycle.size(); ++k)
      img[static_cast<size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
    result = result * from_one_line(std::move(img));
    any = true;
    skip_space();
  }
  if (!any) throw std::invalid_argument("from_cycles: no cycles in '" + s + "'");
  return result;
}

std::string Permutation::cycles_str() const {
  std::ostringstream os;
  std::vector<char> seen(static_cast<size_t>(n()) + 1, 0);
  bool any = false;
  for (int start = 1; start <= n(); ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    std::vector<int> cycle;
    int x = start;
    while (!seen[static_cast<size_t>(x)]) {
      seen[static_cast<size_t>(x)] = 1;
      cycle.push_back(x);
      x = (*this)(x);
    }
    if (cycle.size() < 2) continue;
    os << "(";
    for (size_t k = 0; k < cycle.size(); ++k) {
      if (k && n() > 9) os << " ";
      os << cycle[k];
    }
    os << ")";
    any = true;
  }
  if (!any) return "(1)";
  return os.str();
}

std::string Permutation::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 1; i <= n(); ++i) {
    if (i > 1) os << ",";
    os << (*this)(i);
  }
  os << "]";
  return os.str();
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Permutation> young_subgroup(const Composition& shape) {
  int n = shape.n();
  std::vector<Permutation> out{Permutation(n)};
  int offset = 0;
  for (int r = 1; r <= shape.length(); ++r) {
    int len = shape.part(r);
    if (len > 1) {
      // all rearrangements of the block, merged with what we have
      std::vector<int> block(static_cast<size_t>(len));
      for (int i = 0; i < len; ++i) block[static_cast<size_t>(i)] = offset + i + 1;
      std::vector<Permutation> block_perms;
      std::vector<int> arr = block;
      do {
        std::vector<int> img(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
        for (int i = 0; i < len; ++i) img[static_cast<size_t>(block[static_cast<size_t>(i)] - 1)] = arr[static_cast<size_t>(i)];
        block_perms.push_back(Permutation::from_one_line(std::move(img)));
      } while (std::next_permutation(arr.begin(), arr.end()));
      std::vector<Permutation> merged;
      merged.reserve(out.size() * block_perms.size());
      for (const auto& a : out)
        for (const auto& b : block_perms) merged.push_back(a * b);
      out = std::move(merged);
    }
    offset += len;
  }
  return out;
}

Tableau tableau_apply(const Tableau& t, const Permutation& w) {
  if (t.n() != w.n()) throw std::invalid_argument("tableau_apply: mismatched n");
  std::vector<std::vector<int>> rows = t.rows();
  for (auto& row : rows)
    for (auto& e : row) e = w(e);
  return Tableau(t.shape(), std::move(rows));
}

Permutation tableau_word(const Tableau& t) {
  // row_filled(shape) holds k at the k-th box in row order; d(t) sends it
  // to the entry of t in the same box
  std::vector<int> img(static_cast<size_t>(t.n()));
  int k = 0;
  for (const auto& row : t.rows())
    for (int e : row) img[static_cast<size_t>(k++)] = e;
  return Permutation::from_one_line(std::move(img));
}

Permutation col_word(const Partition& shape) {
  return tableau_word(Tableau::col_filled(shape));
}

}  // namespace heckealg
