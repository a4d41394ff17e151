#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace heckealg {

// composition of n: finitely many nonnegative parts, trailing zeros trimmed;
// part(i) reads as 0 beyond the stored length so comparisons need no padding
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const {  // 1-based
    return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i - 1)] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }

  bool is_partition() const;

  static Composition parse(const std::string& s);  // "2,2"
  std::string str() const;

  bool operator==(const Composition& o) const { return parts_ == o.parts_; }
  std::strong_ordering operator<=>(const Composition& o) const;

  friend std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << c.str(); }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// partition: a composition with weakly decreasing positive parts
class Partition : public Composition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  explicit Partition(const Composition& c);

  Partition transpose() const;

  static Partition parse(const std::string& s);
};

// sort the parts weakly decreasing (and drop zeros)
Partition sorted_to_partition(const Composition& c);

// dominance order on compositions of the same n via prefix sums; with
// strict = true the relation must moreover be proper (a != b)
bool dominates(const Composition& a, const Composition& b, bool strict = false);

// all partitions of n, descending lexicographic (so (n) first, (1^n) last)
std::vector<Partition> partitions_of(int n);

// all compositions of n with positive parts, descending lexicographic
std::vector<Composition> compositions_of(int n);

// filling of the diagram of a composition shape with 1..n, one entry a box;
// stored row by row
class Tableau {
 public:
  Tableau() = default;
  Tableau(Composition shape, std::vector<std::vector<int>> rows);

  const Composition& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(int row, int col) const { return rows_[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)]; }

  // row index (1-based) holding the value e
  int row_of(int e) const;

  // entries increase along rows
  bool is_row_standard() const;
  // partition shape, rows and columns increasing
  bool is_standard() const;

  // the shape occupied by the entries 1..j
  Composition restricted_shape(int j) const;

  // superstandard filling 1..n along rows
  static Tableau row_filled(const Composition& shape);
  // filling of a partition shape down columns
  static Tableau col_filled(const Partition& shape);

  // transpose of a partition-shaped tableau
  Tableau transposed() const;

  static Tableau parse(const std::string& s);  // "1,3/2,4"
  std::string str() const;

  bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
  std::strong_ordering operator<=>(const Tableau& o) const;

  friend std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << t.str(); }

 private:
  Composition shape_;
  std::vector<std::vector<int>> rows_;
};

// row-standard tableaux of the given shape, ordered lexicographically by
// row reading word (concatenation of the rows)
std::vector<Tableau> row_standard_tableaux(const Composition& shape);

// standard tableaux of a partition shape, same order restricted
std::vector<Tableau> standard_tableaux(const Partition& shape);

std::uint64_t standard_tableau_count(const Partition& shape);

// dominance on row-standard tableaux with the same n: s dominates t when
// the restricted shape of s dominates that of t at every level j = 1..n
// (sorted to partitions first is not needed: restrictions of row-standard
// tableaux are compared as compositions via prefix sums); strict requires
// strict dominance at every level
bool tableau_dominates(const Tableau& s, const Tableau& t, bool strict = false);

}  // namespace heckealg
