#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "heckealg/rings.hpp"

namespace heckealg {

template <class T>
class Matrix {
 public:
  Matrix() : r_(0), c_(0) {}
  Matrix(size_t rows, size_t cols, const T& fill)
      : r_(rows), c_(cols), a_(rows * cols, fill) {}

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }

  T& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  void swap_rows(size_t i, size_t k) {
    for (size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

  std::vector<T> row(size_t i) const {
    return std::vector<T>(a_.begin() + static_cast<long>(i * c_),
                          a_.begin() + static_cast<long>((i + 1) * c_));
  }

  Matrix transposed() const {
    Matrix t(c_, r_, a_.empty() ? T() : a_[0]);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  static Matrix identity(size_t n, const T& one, const T& zero) {
    Matrix m(n, n, zero);
    for (size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

 private:
  size_t r_, c_;
  std::vector<T> a_;
};

template <class R>
Matrix<typename R::Elem> mat_mul(const R& ring, const Matrix<typename R::Elem>& a,
                                 const Matrix<typename R::Elem>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  Matrix<typename R::Elem> c(a.rows(), b.cols(), ring.zero());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (ring.is_zero(aik)) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        if (ring.is_zero(b(k, j))) continue;
        c(i, j) += aik * b(k, j);
      }
    }
  return c;
}

template <class R>
Matrix<typename R::Elem> mat_add(const R& ring, const Matrix<typename R::Elem>& a,
                                 const Matrix<typename R::Elem>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("mat_add: shape mismatch");
  Matrix<typename R::Elem> c(a.rows(), a.cols(), ring.zero());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <class R>
Matrix<typename R::Elem> mat_sub(const R& ring, const Matrix<typename R::Elem>& a,
                                 const Matrix<typename R::Elem>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("mat_sub: shape mismatch");
  Matrix<typename R::Elem> c(a.rows(), a.cols(), ring.zero());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

template <class R>
Matrix<typename R::Elem> mat_scale(const R& ring, const typename R::Elem& s,
                                   const Matrix<typename R::Elem>& a) {
  Matrix<typename R::Elem> c(a.rows(), a.cols(), ring.zero());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

template <class R>
bool mat_is_zero(const R& ring, const Matrix<typename R::Elem>& a) {
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (!ring.is_zero(a(i, j))) return false;
  return true;
}

template <class R2>
Matrix<typename R2::Elem> specialize_matrix(const R2& ring, const Matrix<LaurentPoly>& a) {
  Matrix<typename R2::Elem> c(a.rows(), a.cols(), ring.zero());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c(i, j) = ring.from_laurent(a(i, j));
  return c;
}

// Fraction-free row echelon form over a GCD domain.  Each elimination step
// divides exactly by the previous pivot (Bareiss), so entries stay in the
// domain and equal minors of the input.  Pivots are chosen per column to
// minimize the ring's pivot weight; row swaps flip sign.
template <class D>
struct EchelonResult {
  Matrix<typename D::Elem> mat;
  std::vector<size_t> pivot_cols;
  int sign = 1;
  typename D::Elem last_pivot;
  size_t rank() const { return pivot_cols.size(); }
};

template <class D>
EchelonResult<D> bareiss_echelon(const D& ring, Matrix<typename D::Elem> m,
                                 size_t lead_cols = 0) {
  // lead_cols: restrict pivot search to the first lead_cols columns
  // (0 = all); the elimination itself always updates the entire row
  if (lead_cols == 0) lead_cols = m.cols();
  EchelonResult<D> res{std::move(m), {}, 1, ring.one()};
  auto& a = res.mat;
  typename D::Elem prev = ring.one();
  size_t r = 0;
  for (size_t col = 0; col < lead_cols && r < a.rows(); ++col) {
    size_t best = a.rows();
    std::pair<long, long> best_w{0, 0};
    for (size_t i = r; i < a.rows(); ++i) {
      if (ring.is_zero(a(i, col))) continue;
      auto w = ring.pivot_weight(a(i, col));
      if (best == a.rows() || w < best_w) {
        best = i;
        best_w = w;
      }
    }
    if (best == a.rows()) continue;
    if (best != r) {
      a.swap_rows(best, r);
      res.sign = -res.sign;
    }
    const typename D::Elem pivot = a(r, col);
    for (size_t i = r + 1; i < a.rows(); ++i) {
      if (ring.is_zero(a(i, col))) {
        // row untouched except for the Bareiss rescale
        for (size_t j = col + 1; j < a.cols(); ++j) {
          if (ring.is_zero(a(i, j))) continue;
          a(i, j) = ring.divexact(a(i, j) * pivot, prev);
        }
        continue;
      }
      const typename D::Elem head = a(i, col);
      for (size_t j = col + 1; j < a.cols(); ++j) {
        a(i, j) = ring.divexact(a(i, j) * pivot - head * a(r, j), prev);
      }
      a(i, col) = ring.zero();
    }
    prev = pivot;
    res.pivot_cols.push_back(col);
    ++r;
  }
  res.last_pivot = prev;
  return res;
}

// determinant of a square matrix over a GCD domain
template <class D>
typename D::Elem det_domain(const D& ring, const Matrix<typename D::Elem>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_domain: matrix not square");
  if (m.rows() == 0) return ring.one();
  auto ech = bareiss_echelon(ring, m);
  if (ech.rank() < m.rows()) return ring.zero();
  return ech.sign > 0 ? ech.last_pivot : ring.zero() - ech.last_pivot;
}

// How a field's matrices are cleared to a GCD domain for elimination, and
// lifted back
template <class F>
struct ClearTraits;

template <>
struct ClearTraits<RationalFunctionField> {
  using Domain = LaurentRing;
  static Domain domain(const RationalFunctionField&) { return {}; }
  static std::vector<LaurentPoly> clear_row(const RationalFunctionField&,
                                            const std::vector<RationalFunction>& row) {
    LaurentPoly l(1);
    for (const auto& e : row)
      if (!e.is_zero()) {
        LaurentPoly g = LaurentPoly::gcd(l, e.den());
        l = LaurentPoly::divexact(l, g) * e.den();
      }
    std::vector<LaurentPoly> out;
    out.reserve(row.size());
    for (const auto& e : row)
      out.push_back(e.is_zero() ? LaurentPoly()
                                : e.num() * LaurentPoly::divexact(l, e.den()));
    // strip the common content and v-power
    Int g(0);
    long sh = 0;
    bool first = true;
    for (const auto& e : out)
      if (!e.is_zero()) {
        g = int_gcd(g, e.content());
        sh = first ? e.min_exp() : std::min(sh, e.min_exp());
        first = false;
      }
    if (!first && (g > 1 || sh != 0))
      for (auto& e : out)
        if (!e.is_zero()) e = LaurentPoly::divexact(e, LaurentPoly::term(g, sh));
    return out;
  }
  static RationalFunction lift(const RationalFunctionField&, const LaurentPoly& a) {
    return RationalFunction(a);
  }
};

template <>
struct ClearTraits<RationalAtQ> {
  using Domain = IntRing;
  static Domain domain(const RationalAtQ&) { return {}; }
  static std::vector<Int> clear_row(const RationalAtQ&, const std::vector<Rat>& row) {
    Int l(1);
    for (const auto& e : row)
      if (e != 0) l = int_lcm(l, e.get_den());
    std::vector<Int> out;
    out.reserve(row.size());
    for (const auto& e : row) {
      Rat scaled = e * Rat(l);
      out.push_back(scaled.get_num());
    }
    Int g(0);
    for (const auto& e : out) g = int_gcd(g, e);
    if (g > 1)
      for (auto& e : out) e = int_divexact(e, g);
    return out;
  }
  static Rat lift(const RationalAtQ&, const Int& a) { return Rat(a); }
};

template <>
struct ClearTraits<PrimeFieldAtQ> {
  using Domain = PrimeFieldAtQ;
  static Domain domain(const PrimeFieldAtQ& f) { return f; }
  static std::vector<GFpElem> clear_row(const PrimeFieldAtQ&, std::vector<GFpElem> row) {
    return row;
  }
  static GFpElem lift(const PrimeFieldAtQ&, const GFpElem& a) { return a; }
};

template <class F>
Matrix<typename ClearTraits<F>::Domain::Elem> clear_matrix(const F& field,
                                                           const Matrix<typename F::Elem>& m) {
  using CT = ClearTraits<F>;
  auto dom = CT::domain(field);
  Matrix<typename CT::Domain::Elem> out(m.rows(), m.cols(), dom.zero());
  for (size_t i = 0; i < m.rows(); ++i) {
    auto cleared = CT::clear_row(field, m.row(i));
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = cleared[j];
  }
  return out;
}

template <class F>
size_t mat_rank(const F& field, const Matrix<typename F::Elem>& m) {
  using CT = ClearTraits<F>;
  auto dom = CT::domain(field);
  return bareiss_echelon(dom, clear_matrix(field, m)).rank();
}

// scale a field vector so its entries become a primitive domain vector with
// a deterministic sign; stabilizes serialized output
template <class F>
void normalize_vector(const F& field, std::vector<typename F::Elem>& x) {
  using CT = ClearTraits<F>;
  auto cleared = CT::clear_row(field, x);
  auto dom = CT::domain(field);
  // fix the sign/scale by the first nonzero entry
  for (const auto& e : cleared) {
    if (dom.is_zero(e)) continue;
    if constexpr (std::is_same_v<F, PrimeFieldAtQ>) {
      GFpElem inv = e.inverse();
      for (size_t i = 0; i < x.size(); ++i) x[i] = cleared[i] * inv;
    } else if constexpr (std::is_same_v<F, RationalAtQ>) {
      int neg = e < 0 ? -1 : 1;
      for (size_t i = 0; i < x.size(); ++i) x[i] = Rat(cleared[i] * neg);
    } else {
      static_assert(std::is_same_v<F, RationalFunctionField>);
      int neg = e.coeffs().back() < 0 ? -1 : 1;
      for (size_t i = 0; i < x.size(); ++i)
        x[i] = RationalFunction(cleared[i].scaled(Int(neg), 0));
    }
    return;
  }
}

// basis of the right null space {x : m x = 0}; deterministic, one vector
// per free column in column order, each normalized
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& field,
                                                        const Matrix<typename F::Elem>& m) {
  using CT = ClearTraits<F>;
  auto dom = CT::domain(field);
  auto ech = bareiss_echelon(dom, clear_matrix(field, m));
  const auto& e = ech.mat;
  size_t cols = m.cols();
  std::vector<char> is_pivot(cols, 0);
  for (size_t p : ech.pivot_cols) is_pivot[p] = 1;
  std::vector<std::vector<typename F::Elem>> out;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename F::Elem> x(cols, field.zero());
    x[f] = field.one();
    for (size_t ri = ech.rank(); ri-- > 0;) {
      size_t p = ech.pivot_cols[ri];
      if (p > f) {
        x[p] = field.zero();
        continue;
      }
      typename F::Elem acc = field.zero();
      for (size_t j = p + 1; j <= f; ++j) {
        if (dom.is_zero(e(ri, j)) || field.is_zero(x[j])) continue;
        acc += CT::lift(field, e(ri, j)) * x[j];
      }
      x[p] = field.div(field.zero() - acc, CT::lift(field, e(ri, p)));
    }
    normalize_vector(field, x);
    out.push_back(std::move(x));
  }
  return out;
}

template <class F>
size_t row_space_rank(const F& field, const std::vector<std::vector<typename F::Elem>>& rows) {
  if (rows.empty()) return 0;
  Matrix<typename F::Elem> m(rows.size(), rows[0].size(), field.zero());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw std::invalid_argument("row_space_rank: ragged rows");
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return mat_rank(field, m);
}

template <class F>
bool in_row_span(const F& field, const std::vector<std::vector<typename F::Elem>>& rows,
                 const std::vector<typename F::Elem>& vec) {
  auto stacked = rows;
  stacked.push_back(vec);
  return row_space_rank(field, rows) == row_space_rank(field, stacked);
}

template <class F>
bool row_spans_equal(const F& field, const std::vector<std::vector<typename F::Elem>>& a,
                     const std::vector<std::vector<typename F::Elem>>& b) {
  size_t ra = row_space_rank(field, a);
  size_t rb = row_space_rank(field, b);
  if (ra != rb) return false;
  auto stacked = a;
  stacked.insert(stacked.end(), b.begin(), b.end());
  return row_space_rank(field, stacked) == ra;
}

// repeated exact solves of c x = b for a fixed invertible square c; the
// augmented system [c | I] is eliminated once fraction-free, after which a
// solve is a matrix-vector product and one back substitution
template <class F>
class LinearSolver {
 public:
  using Elem = typename F::Elem;
  using CT = ClearTraits<F>;
  using DElem = typename CT::Domain::Elem;

  LinearSolver(const F& field, const Matrix<Elem>& c) : field_(field), dom_(CT::domain(field)), m_(c.rows()) {
    if (c.rows() != c.cols()) throw std::invalid_argument("LinearSolver: matrix not square");
    Matrix<Elem> aug(m_, 2 * m_, field_.zero());
    for (size_t i = 0; i < m_; ++i) {
      for (size_t j = 0; j < m_; ++j) aug(i, j) = c(i, j);
      aug(i, m_ + i) = field_.one();
    }
    auto cleared = clear_matrix(field_, aug);
    auto ech = bareiss_echelon(dom_, std::move(cleared), m_);
    if (ech.rank() != m_) throw std::domain_error("LinearSolver: matrix is singular");
    for (size_t i = 0; i + 1 < m_; ++i)
      if (ech.pivot_cols[i] != i) throw std::logic_error("LinearSolver: unexpected pivot pattern");
    ech_ = std::move(ech.mat);
  }

  std::vector<Elem> solve(const std::vector<Elem>& b) const {
    if (b.size() != m_) throw std::invalid_argument("LinearSolver::solve: size mismatch");
    // rhs = T b where T is the stored transform block
    std::vector<Elem> rhs(m_, field_.zero());
    for (size_t i = 0; i < m_; ++i) {
      Elem acc = field_.zero();
      for (size_t j = 0; j < m_; ++j) {
        const DElem& t = ech_(i, m_ + j);
        if (dom_.is_zero(t) || field_.is_zero(b[j])) continue;
        acc += CT::lift(field_, t) * b[j];
      }
      rhs[i] = acc;
    }
    std::vector<Elem> x(m_, field_.zero());
    for (size_t i = m_; i-- > 0;) {
      Elem acc = rhs[i];
      for (size_t j = i + 1; j < m_; ++j) {
        if (dom_.is_zero(ech_(i, j)) || field_.is_zero(x[j])) continue;
        acc -= CT::lift(field_, ech_(i, j)) * x[j];
      }
      x[i] = field_.div(acc, CT::lift(field_, ech_(i, i)));
    }
    return x;
  }

 private:
  F field_;
  typename CT::Domain dom_;
  size_t m_;
  Matrix<DElem> ech_;
};

// characteristic polynomial x^n + c[n-1] x^(n-1) + ... + c[0] of a rational
// matrix, by the trace recursion (Faddeev-LeVerrier); exact over Q
std::vector<Rat> charpoly_rational(const Matrix<Rat>& a);

}  // namespace heckealg
