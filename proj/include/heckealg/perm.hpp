#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "heckealg/combinat.hpp"

namespace heckealg {

// permutation of {1..n} acting on the right: i(st) = (is)t, so products
// compose left to right
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  static Permutation from_one_line(std::vector<int> images);
  static Permutation transposition(int n, int i);  // simple s_i = (i, i+1)

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  // Coxeter length = inversion count
  int length() const;
  // whether length(w s_i) < length(w), i.e. i appears to the right of i+1
  bool right_descent(int i) const;
  // w * s_i (swaps the values i and i+1)
  Permutation times_s(int i) const;

  // the unique reduced word picked by repeatedly stripping the smallest
  // right descent; product of s_{word[0]} ... s_{word[k-1]} left to right
  std::vector<int> reduced_word() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  std::strong_ordering operator<=>(const Permutation& o) const {
    return std::lexicographical_compare_three_way(img_.begin(), img_.end(),
                                                  o.img_.begin(), o.img_.end());
  }

  // cycle notation: parse "(1 3 2)(4 5)" or compact "(132)(45)" (digits
  // split only when n <= 9); identity prints and parses as "(1)"
  static Permutation from_cycles(const std::string& s, int n);
  std::string cycles_str() const;

  std::string str() const;  // one-line "[2,1,3]"
  friend std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << w.str(); }

 private:
  std::vector<int> img_;  // img_[i-1] = (i)w
};

// all n! permutations in lexicographic one-line order (identity first)
std::vector<Permutation> all_permutations(int n);

// the Young subgroup permuting each block {offset+1 .. offset+part}
// separately; enumerated blockwise in lexicographic one-line order
std::vector<Permutation> young_subgroup(const Composition& shape);

// entrywise action: each entry e of t becomes (e)w
Tableau tableau_apply(const Tableau& t, const Permutation& w);

// the permutation d(t) with t = row_filled(shape) * d(t)
Permutation tableau_word(const Tableau& t);

// w(lambda) = d(col_filled(lambda)), the distinguished permutation joining
// the row filling to the column filling
Permutation col_word(const Partition& shape);

}  // namespace heckealg
