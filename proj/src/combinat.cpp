#include "heckealg/combinat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace heckealg {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("Composition: negative part");
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  n_ = 0;
  for (int p : parts_) n_ += p;
}

bool Composition::is_partition() const {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) return false;
    if (i > 0 && parts_[i] > parts_[i - 1]) return false;
  }
  return true;
}

Composition Composition::parse(const std::string& s) {
  std::vector<int> parts;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    int val;
    try {
      val = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("Composition::parse: bad part '" + tok + "'");
    }
    if (pos != tok.size())
      throw std::invalid_argument("Composition::parse: bad part '" + tok + "'");
    parts.push_back(val);
  }
  if (parts.empty()) throw std::invalid_argument("Composition::parse: empty");
  return Composition(std::move(parts));
}

std::string Composition::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  if (parts_.empty()) os << "0";
  return os.str();
}

std::strong_ordering Composition::operator<=>(const Composition& o) const {
  return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                o.parts_.begin(), o.parts_.end());
}

Partition::Partition(std::vector<int> parts) : Composition(std::move(parts)) {
  if (!is_partition()) throw std::invalid_argument("Partition: parts must decrease weakly: " + str());
}

Partition::Partition(const Composition& c) : Composition(c) {
  if (!is_partition()) throw std::invalid_argument("Partition: parts must decrease weakly: " + str());
}

Partition Partition::transpose() const {
  std::vector<int> t(part(1) > 0 ? static_cast<size_t>(part(1)) : 0, 0);
  for (int i = 1; i <= length(); ++i)
    for (int j = 0; j < part(i); ++j) ++t[static_cast<size_t>(j)];
  return Partition(std::move(t));
}

Partition Partition::parse(const std::string& s) { return Partition(Composition::parse(s)); }

Partition sorted_to_partition(const Composition& c) {
  std::vector<int> parts = c.parts();
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

bool dominates(const Composition& a, const Composition& b, bool strict) {
  if (a.n() != b.n())
    throw std::invalid_argument("dominates: compositions of different n");
  int len = std::max(a.length(), b.length());
  long sa = 0, sb = 0;
  bool some_strict = false;
  for (int i = 1; i <= len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) return false;
    if (sa > sb) some_strict = true;
  }
  return !strict || some_strict;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  // first part largest; recursion emits descending lexicographic order
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  if (n == 0) out.assign(1, Partition(std::vector<int>{}));
  return out;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("compositions_of: negative n");
  std::vector<Composition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = rest; p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p);
      cur.pop_back();
    }
  };
  rec(n);
  if (n == 0) out.assign(1, Composition(std::vector<int>{}));
  return out;
}

Tableau::Tableau(Composition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw std::invalid_argument("Tableau: row count does not match shape");
  std::vector<char> seen(static_cast<size_t>(shape_.n()) + 1, 0);
  for (int i = 1; i <= shape_.length(); ++i) {
    if (static_cast<int>(rows_[static_cast<size_t>(i - 1)].size()) != shape_.part(i))
      throw std::invalid_argument("Tableau: row length does not match shape");
    for (int e : rows_[static_cast<size_t>(i - 1)]) {
      if (e < 1 || e > shape_.n() || seen[static_cast<size_t>(e)])
        throw std::invalid_argument("Tableau: entries must be a permutation of 1..n");
      seen[static_cast<size_t>(e)] = 1;
    }
  }
}

int Tableau::row_of(int e) const {
  for (size_t r = 0; r < rows_.size(); ++r)
    for (int x : rows_[r])
      if (x == e) return static_cast<int>(r + 1);
  throw std::out_of_range("Tableau::row_of: no such entry");
}

bool Tableau::is_row_standard() const {
  for (const auto& row : rows_)
    for (size_t j = 1; j < row.size(); ++j)
      if (row[j - 1] >= row[j]) return false;
  return true;
}

bool Tableau::is_standard() const {
  if (!shape_.is_partition() || !is_row_standard()) return false;
  for (size_t r = 1; r < rows_.size(); ++r)
    for (size_t j = 0; j < rows_[r].size(); ++j)
      if (rows_[r - 1][j] >= rows_[r][j]) return false;
  return true;
}

Composition Tableau::restricted_shape(int j) const {
  if (j < 0 || j > n()) throw std::out_of_range("Tableau::restricted_shape: j out of range");
  std::vector<int> parts(rows_.size(), 0);
  for (size_t r = 0; r < rows_.size(); ++r)
    for (int e : rows_[r])
      if (e <= j) ++parts[r];
  return Composition(std::move(parts));
}

Tableau Tableau::row_filled(const Composition& shape) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int i = 1; i <= shape.length(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < shape.part(i); ++j) row.push_back(next++);
    rows.push_back(std::move(row));
  }
  return Tableau(shape, std::move(rows));
}

Tableau Tableau::col_filled(const Partition& shape) {
  std::vector<std::vector<int>> rows(static_cast<size_t>(shape.length()));
  for (int i = 1; i <= shape.length(); ++i)
    rows[static_cast<size_t>(i - 1)].resize(static_cast<size_t>(shape.part(i)));
  int next = 1;
  for (int col = 1; col <= shape.part(1); ++col)
    for (int row = 1; row <= shape.length(); ++row)
      if (shape.part(row) >= col) rows[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)] = next++;
  return Tableau(shape, std::move(rows));
}

Tableau Tableau::transposed() const {
  Partition shape(shape_);
  Partition tshape = shape.transpose();
  std::vector<std::vector<int>> rows(static_cast<size_t>(tshape.length()));
  for (int i = 1; i <= tshape.length(); ++i)
    rows[static_cast<size_t>(i - 1)].resize(static_cast<size_t>(tshape.part(i)));
  for (int r = 1; r <= shape.length(); ++r)
    for (int c = 1; c <= shape.part(r); ++c)
      rows[static_cast<size_t>(c - 1)][static_cast<size_t>(r - 1)] = entry(r, c);
  return Tableau(tshape, std::move(rows));
}

Tableau Tableau::parse(const std::string& s) {
  std::vector<std::vector<int>> rows;
  std::vector<int> shape;
  std::istringstream is(s);
  std::string rowtok;
  while (std::getline(is, rowtok, '/')) {
    std::vector<int> row;
    std::istringstream ris(rowtok);
    std::string tok;
    while (std::getline(ris, tok, ',')) {
      size_t pos = 0;
      int val;
      try {
        val = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("Tableau::parse: bad entry '" + tok + "'");
      }
      if (pos != tok.size())
        throw std::invalid_argument("Tableau::parse: bad entry '" + tok + "'");
      row.push_back(val);
    }
    if (row.empty()) throw std::invalid_argument("Tableau::parse: empty row");
    shape.push_back(static_cast<int>(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("Tableau::parse: empty");
  return Tableau(Composition(std::move(shape)), std::move(rows));
}

std::string Tableau::str() const {
  std::ostringstream os;
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) os << "/";
    for (size_t j = 0; j < rows_[r].size(); ++j) {
      if (j) os << ",";
      os << rows_[r][j];
    }
  }
  return os.str();
}

std::strong_ordering Tableau::operator<=>(const Tableau& o) const {
  return std::lexicographical_compare_three_way(
      rows_.begin(), rows_.end(), o.rows_.begin(), o.rows_.end(),
      [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
      });
}

std::vector<Tableau> row_standard_tableaux(const Composition& shape) {
  // fill rows top to bottom, choosing each row as an increasing sequence
  // from the unused entries in lexicographic order; the resulting list is
  // ordered by row reading word
  std::vector<Tableau> out;
  int n = shape.n();
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  std::vector<std::vector<int>> rows;
  std::function<void(int)> fill_row = [&](int r) {
    if (r > shape.length()) {
      out.emplace_back(shape, rows);
      return;
    }
    int len = shape.part(r);
    std::vector<int> row;
    std::function<void(int)> choose = [&](int min_next) {
      if (static_cast<int>(row.size()) == len) {
        rows.push_back(row);
        fill_row(r + 1);
        rows.pop_back();
        return;
      }
      for (int e = min_next; e <= n; ++e) {
        if (used[static_cast<size_t>(e)]) continue;
        used[static_cast<size_t>(e)] = 1;
        row.push_back(e);
        choose(e + 1);
        row.pop_back();
        used[static_cast<size_t>(e)] = 0;
      }
    };
    choose(1);
  };
  fill_row(1);
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  std::vector<Tableau> out;
  for (const Tableau& t : row_standard_tableaux(shape))
    if (t.is_standard()) out.push_back(t);
  return out;
}

std::uint64_t standard_tableau_count(const Partition& shape) {
  // hook length formula; n is small enough that n! fits in 64 bits
  if (shape.n() > 20) throw std::invalid_argument("standard_tableau_count: n too large");
  Partition tr = shape.transpose();
  std::uint64_t hook_product = 1;
  for (int r = 1; r <= shape.length(); ++r)
    for (int c = 1; c <= shape.part(r); ++c)
      hook_product *= static_cast<std::uint64_t>(shape.part(r) - c + tr.part(c) - r + 1);
  std::uint64_t fact = 1;
  for (int k = 2; k <= shape.n(); ++k) fact *= static_cast<std::uint64_t>(k);
  return fact / hook_product;
}

bool tableau_dominates(const Tableau& s, const Tableau& t, bool strict) {
  if (!s.is_row_standard() || !t.is_row_standard())
    throw std::invalid_argument("tableau_dominates: tableaux must be row-standard");
  if (s.n() != t.n())
    throw std::invalid_argument("tableau_dominates: tableaux of different n");
  for (int j = 1; j <= s.n(); ++j)
    if (!dominates(s.restricted_shape(j), t.restricted_shape(j), strict)) return false;
  return true;
}

}  // namespace heckealg
