#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "heckealg/combinat.hpp"
#include "heckealg/matrix.hpp"

namespace heckealg {

// basis vectors of V^(x)n for V with basis e_1..e_m are indexed by sequences
// over {1..m}; everything below keeps them in lexicographic order
using TensorIndex = std::vector<int>;

inline std::vector<int> index_weight(const TensorIndex& idx, int m) {
  std::vector<int> w(static_cast<size_t>(m), 0);
  for (int e : idx) {
    if (e < 1 || e > m) throw std::invalid_argument("index_weight: letter out of range");
    ++w[static_cast<size_t>(e - 1)];
  }
  return w;
}

inline std::vector<TensorIndex> all_indices(int m, int n) {
  if (m < 1 || n < 0) throw std::invalid_argument("all_indices: bad dimensions");
  std::vector<TensorIndex> out;
  TensorIndex idx(static_cast<size_t>(n), 1);
  while (true) {
    out.push_back(idx);
    int j = n - 1;
    while (j >= 0 && idx[static_cast<size_t>(j)] == m) idx[static_cast<size_t>(j--)] = 1;
    if (j < 0) break;
    ++idx[static_cast<size_t>(j)];
  }
  return out;
}

// all indices of the given weight, lexicographically; weights are letter
// counts, padded with zeros up to m entries. A weight with a negative entry
// has an empty space (these arise as shifted weights of operators).
inline std::vector<TensorIndex> weight_space(const std::vector<int>& weight, int m, int n) {
  if (static_cast<int>(weight.size()) > m)
    throw std::invalid_argument("weight_space: weight longer than m");
  for (int p : weight)
    if (p < 0) return {};
  long total = 0;
  for (int p : weight) total += p;
  if (total != n) throw std::invalid_argument("weight_space: weight does not sum to n");
  TensorIndex idx;
  for (size_t k = 0; k < weight.size(); ++k)
    idx.insert(idx.end(), static_cast<size_t>(weight[k]), static_cast<int>(k) + 1);
  std::vector<TensorIndex> out;
  do out.push_back(idx);
  while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

// --- one-site operators on V, as m x m matrices; entry (r, c) is the
// --- coefficient of e_{r+1} in the image of e_{c+1}

template <class R>
Matrix<typename R::Elem> site_identity(int m, const R& ring) {
  return Matrix<typename R::Elem>::identity(static_cast<size_t>(m), ring.one(), ring.zero());
}

template <class R>
Matrix<typename R::Elem> site_e(int m, const R& ring, int i) {
  Matrix<typename R::Elem> a(static_cast<size_t>(m), static_cast<size_t>(m), ring.zero());
  a(static_cast<size_t>(i - 1), static_cast<size_t>(i)) = ring.one();  // e_{i+1} -> e_i
  return a;
}

template <class R>
Matrix<typename R::Elem> site_f(int m, const R& ring, int i) {
  Matrix<typename R::Elem> a(static_cast<size_t>(m), static_cast<size_t>(m), ring.zero());
  a(static_cast<size_t>(i), static_cast<size_t>(i - 1)) = ring.one();  // e_i -> e_{i+1}
  return a;
}

// v^h for h = sum h_k H_k acts on e_j by v^{h_j}
template <class R>
Matrix<typename R::Elem> site_cartan(int m, const R& ring, const std::vector<long>& h) {
  if (static_cast<int>(h.size()) > m) throw std::invalid_argument("site_cartan: h longer than m");
  Matrix<typename R::Elem> a(static_cast<size_t>(m), static_cast<size_t>(m), ring.zero());
  for (int j = 0; j < m; ++j)
    a(static_cast<size_t>(j), static_cast<size_t>(j)) =
        ring.v_power(static_cast<size_t>(j) < h.size() ? h[static_cast<size_t>(j)] : 0);
  return a;
}

// K_i^power with K_i = v^{H_i - H_{i+1}}
template <class R>
Matrix<typename R::Elem> site_k(int m, const R& ring, int i, long power) {
  std::vector<long> h(static_cast<size_t>(m), 0);
  h[static_cast<size_t>(i - 1)] = power;
  h[static_cast<size_t>(i)] = -power;
  return site_cartan(m, ring, h);
}

// a weight-homogeneous operator on tensor space: the shift it applies to
// weights plus its sparse action on basis vectors. Operators act on the left,
// so the product ab applies b first; u_product follows that convention.
template <class R>
struct UOperator {
  std::vector<long> shift;  // length m
  std::function<std::map<TensorIndex, typename R::Elem>(const TensorIndex&)> apply;
};

// expand a pure tensor of one-site operators against a basis vector
template <class R>
void apply_sites(const R& ring, const std::vector<Matrix<typename R::Elem>>& sites,
                 const TensorIndex& idx, std::map<TensorIndex, typename R::Elem>& out) {
  using Elem = typename R::Elem;
  const size_t n = idx.size();
  if (sites.size() != n) throw std::invalid_argument("apply_sites: arity mismatch");
  TensorIndex image(n, 0);
  std::function<void(size_t, const Elem&)> walk = [&](size_t j, const Elem& coeff) {
    if (j == n) {
      auto [it, fresh] = out.try_emplace(image, coeff);
      if (!fresh) {
        it->second += coeff;
        if (ring.is_zero(it->second)) out.erase(it);
      }
      return;
    }
    const auto& a = sites[j];
    size_t c = static_cast<size_t>(idx[j] - 1);
    for (size_t r = 0; r < a.rows(); ++r) {
      if (ring.is_zero(a(r, c))) continue;
      image[j] = static_cast<int>(r) + 1;
      Elem next = coeff * a(r, c);
      walk(j + 1, next);
    }
  };
  walk(0, ring.one());
}

template <class R>
UOperator<R> u_from_terms(int m, const R& ring,
                          std::vector<std::vector<Matrix<typename R::Elem>>> terms,
                          std::vector<long> shift) {
  UOperator<R> op;
  op.shift = std::move(shift);
  op.apply = [m, ring, terms = std::move(terms)](const TensorIndex& idx) {
    std::map<TensorIndex, typename R::Elem> out;
    for (const auto& sites : terms) apply_sites(ring, sites, idx, out);
    return out;
  };
  return op;
}

// E_i on the n-fold tensor power, expanded through the iterated coproduct:
// a sum of n pure tensors with E_i in one slot and K_i in every later slot
template <class R>
UOperator<R> u_generator_e(int m, int n, const R& ring, int i) {
  if (i < 1 || i >= m) throw std::invalid_argument("u_generator_e: bad index");
  std::vector<std::vector<Matrix<typename R::Elem>>> terms;
  for (int j = 0; j < n; ++j) {
    std::vector<Matrix<typename R::Elem>> sites;
    for (int p = 0; p < n; ++p) {
      if (p < j)
        sites.push_back(site_identity(m, ring));
      else if (p == j)
        sites.push_back(site_e(m, ring, i));
      else
        sites.push_back(site_k(m, ring, i, 1));
    }
    terms.push_back(std::move(sites));
  }
  std::vector<long> shift(static_cast<size_t>(m), 0);
  shift[static_cast<size_t>(i - 1)] = 1;
  shift[static_cast<size_t>(i)] = -1;
  return u_from_terms(m, ring, std::move(terms), std::move(shift));
}

// F_i with K_i^{-1} in every earlier slot
template <class R>
UOperator<R> u_generator_f(int m, int n, const R& ring, int i) {
  if (i < 1 || i >= m) throw std::invalid_argument("u_generator_f: bad index");
  std::vector<std::vector<Matrix<typename R::Elem>>> terms;
  for (int j = 0; j < n; ++j) {
    std::vector<Matrix<typename R::Elem>> sites;
    for (int p = 0; p < n; ++p) {
      if (p < j)
        sites.push_back(site_k(m, ring, i, -1));
      else if (p == j)
        sites.push_back(site_f(m, ring, i));
      else
        sites.push_back(site_identity(m, ring));
    }
    terms.push_back(std::move(sites));
  }
  std::vector<long> shift(static_cast<size_t>(m), 0);
  shift[static_cast<size_t>(i - 1)] = -1;
  shift[static_cast<size_t>(i)] = 1;
  return u_from_terms(m, ring, std::move(terms), std::move(shift));
}

// v^h acts on every slot at once
template <class R>
UOperator<R> u_cartan(int m, int n, const R& ring, const std::vector<long>& h) {
  std::vector<std::vector<Matrix<typename R::Elem>>> terms(
      1, std::vector<Matrix<typename R::Elem>>(static_cast<size_t>(n), site_cartan(m, ring, h)));
  return u_from_terms(m, ring, std::move(terms), std::vector<long>(static_cast<size_t>(m), 0));
}

template <class R>
UOperator<R> u_generator_k(int m, int n, const R& ring, int i, long power = 1) {
  if (i < 1 || i >= m) throw std::invalid_argument("u_generator_k: bad index");
  std::vector<long> h(static_cast<size_t>(m), 0);
  h[static_cast<size_t>(i - 1)] = power;
  h[static_cast<size_t>(i)] = -power;
  return u_cartan(m, n, ring, h);
}

// K_{i,j} = v^{H_i - H_j}
template <class R>
UOperator<R> u_k_root(int m, int n, const R& ring, int i, int j, long power = 1) {
  if (i < 1 || j < 1 || i > m || j > m || i == j)
    throw std::invalid_argument("u_k_root: bad indices");
  std::vector<long> h(static_cast<size_t>(m), 0);
  h[static_cast<size_t>(i - 1)] = power;
  h[static_cast<size_t>(j - 1)] = -power;
  return u_cartan(m, n, ring, h);
}

template <class R>
UOperator<R> u_scale(const R& ring, const typename R::Elem& c, const UOperator<R>& a) {
  UOperator<R> op;
  op.shift = a.shift;
  op.apply = [ring, c, app = a.apply](const TensorIndex& idx) {
    auto out = app(idx);
    for (auto it = out.begin(); it != out.end();) {
      it->second = c * it->second;
      if (ring.is_zero(it->second))
        it = out.erase(it);
      else
        ++it;
    }
    return out;
  };
  return op;
}

template <class R>
UOperator<R> u_add(const R& ring, const UOperator<R>& a, const UOperator<R>& b, bool negate_b = false) {
  if (a.shift != b.shift) throw std::invalid_argument("u_add: mixed weight shifts");
  UOperator<R> op;
  op.shift = a.shift;
  op.apply = [ring, fa = a.apply, fb = b.apply, negate_b](const TensorIndex& idx) {
    auto out = fa(idx);
    for (auto& [k, c] : fb(idx)) {
      typename R::Elem t = c;
      if (negate_b) t = ring.zero() - t;
      auto [it, fresh] = out.try_emplace(k, t);
      if (!fresh) {
        it->second += t;
        if (ring.is_zero(it->second)) out.erase(it);
      }
    }
    return out;
  };
  return op;
}

template <class R>
UOperator<R> u_sub(const R& ring, const UOperator<R>& a, const UOperator<R>& b) {
  return u_add(ring, a, b, true);
}

// the operator of the product ab (b acts first)
template <class R>
UOperator<R> u_product(const R& ring, const UOperator<R>& a, const UOperator<R>& b) {
  if (a.shift.size() != b.shift.size()) throw std::invalid_argument("u_product: mixed m");
  UOperator<R> op;
  op.shift = a.shift;
  for (size_t k = 0; k < op.shift.size(); ++k) op.shift[k] += b.shift[k];
  op.apply = [ring, fa = a.apply, fb = b.apply](const TensorIndex& idx) {
    std::map<TensorIndex, typename R::Elem> out;
    for (const auto& [mid, c] : fb(idx))
      for (const auto& [fin, d] : fa(mid)) {
        typename R::Elem t = c * d;
        auto [it, fresh] = out.try_emplace(fin, t);
        if (!fresh) {
          it->second += t;
          if (ring.is_zero(it->second)) out.erase(it);
        }
      }
    return out;
  };
  return op;
}

template <class R>
UOperator<R> u_power(const R& ring, const UOperator<R>& a, int r) {
  if (r < 1) throw std::invalid_argument("u_power: positive exponent required");
  UOperator<R> acc = a;
  for (int s = 1; s < r; ++s) acc = u_product(ring, acc, a);
  return acc;
}

// root vectors: the raising vector for i < j and the lowering one for i > j,
// built by the commutator recursion from the adjacent generators
//   E_{i,j} = v^{-1} E_i E_{i+1,j} - E_{i+1,j} E_i        (i < j)
//   E_{j,i} = v E_{j,i+1} F_i - F_i E_{j,i+1}             (i < j)
template <class R>
UOperator<R> root_vector(int m, int n, const R& ring, int i, int j) {
  if (i < 1 || j < 1 || i > m || j > m || i == j)
    throw std::invalid_argument("root_vector: bad indices");
  if (i < j) {
    if (j - i == 1) return u_generator_e(m, n, ring, i);
    UOperator<R> ei = u_generator_e(m, n, ring, i);
    UOperator<R> rest = root_vector(m, n, ring, i + 1, j);
    return u_sub(ring, u_scale(ring, ring.v_power(-1), u_product(ring, ei, rest)),
                 u_product(ring, rest, ei));
  }
  int a = i, b = j;  // lowering: a > b
  if (a - b == 1) return u_generator_f(m, n, ring, b);
  UOperator<R> fb = u_generator_f(m, n, ring, b);
  UOperator<R> rest = root_vector(m, n, ring, a, b + 1);
  return u_sub(ring, u_scale(ring, ring.v_power(1), u_product(ring, rest, fb)),
               u_product(ring, fb, rest));
}

// (K_{i,j} - K_{i,j}^{-1}) / (v - v^{-1}), the Cartan element of the
// sl2-triple through the root (i, j)
template <class F>
UOperator<F> u_cartan_quotient(int m, int n, const F& field, int i, int j) {
  static_assert(F::is_field);
  typename F::Elem denom = field.v_power(1) - field.v_power(-1);
  auto diff = u_sub(field, u_k_root(m, n, field, i, j, 1), u_k_root(m, n, field, i, j, -1));
  return u_scale(field, field.div(field.one(), denom), diff);
}

// --- dense matrices; row r of a matrix holds the coordinates of the image of
// --- the r-th basis vector, so right-action matrices compose in order while
// --- left-action operator products compose reversed

template <class R>
Matrix<typename R::Elem> full_matrix(int m, int n, const R& ring, const UOperator<R>& op) {
  auto idx = all_indices(m, n);
  std::map<TensorIndex, size_t> pos;
  for (size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = k;
  Matrix<typename R::Elem> a(idx.size(), idx.size(), ring.zero());
  for (size_t r = 0; r < idx.size(); ++r)
    for (const auto& [im, c] : op.apply(idx[r])) a(r, pos.at(im)) = c;
  return a;
}

template <class R>
struct TensorOperator {
  std::vector<int> domain_weight, codomain_weight;
  std::vector<TensorIndex> domain_basis, codomain_basis;
  Matrix<typename R::Elem> matrix;
};

inline std::vector<int> shifted_weight(const std::vector<int>& weight, const std::vector<long>& shift) {
  std::vector<int> out(shift.size(), 0);
  for (size_t k = 0; k < shift.size(); ++k)
    out[k] = (k < weight.size() ? weight[k] : 0) + static_cast<int>(shift[k]);
  return out;
}

template <class R>
TensorOperator<R> weight_matrix(int m, int n, const R& ring, const UOperator<R>& op,
                                const std::vector<int>& domain_weight) {
  TensorOperator<R> out;
  out.domain_weight = domain_weight;
  out.domain_weight.resize(static_cast<size_t>(m), 0);
  out.codomain_weight = shifted_weight(out.domain_weight, op.shift);
  out.domain_basis = weight_space(out.domain_weight, m, n);
  out.codomain_basis = weight_space(out.codomain_weight, m, n);
  std::map<TensorIndex, size_t> pos;
  for (size_t k = 0; k < out.codomain_basis.size(); ++k) pos[out.codomain_basis[k]] = k;
  out.matrix = Matrix<typename R::Elem>(out.domain_basis.size(), out.codomain_basis.size(), ring.zero());
  for (size_t r = 0; r < out.domain_basis.size(); ++r)
    for (const auto& [im, c] : op.apply(out.domain_basis[r])) {
      auto it = pos.find(im);
      if (it == pos.end()) throw std::logic_error("weight_matrix: image outside the shifted weight");
      out.matrix(r, it->second) = c;
    }
  return out;
}

// --- the Hecke algebra action by place permutation with q-corrections

template <class R>
std::map<TensorIndex, typename R::Elem> hecke_apply_t(const R& ring, const TensorIndex& idx, int k) {
  int n = static_cast<int>(idx.size());
  if (k < 1 || k >= n) throw std::invalid_argument("hecke_apply_t: bad generator");
  size_t a = static_cast<size_t>(k - 1), b = static_cast<size_t>(k);
  std::map<TensorIndex, typename R::Elem> out;
  if (idx[a] == idx[b]) {
    out[idx] = ring.v_power(2);
    return out;
  }
  TensorIndex swapped = idx;
  std::swap(swapped[a], swapped[b]);
  if (idx[a] < idx[b]) {
    out[std::move(swapped)] = ring.v_power(1);
  } else {
    out[std::move(swapped)] = ring.v_power(1);
    out[idx] = ring.v_power(2) - ring.one();
  }
  return out;
}

template <class R>
Matrix<typename R::Elem> hecke_full_matrix(int m, int n, const R& ring, int k) {
  auto idx = all_indices(m, n);
  std::map<TensorIndex, size_t> pos;
  for (size_t r = 0; r < idx.size(); ++r) pos[idx[r]] = r;
  Matrix<typename R::Elem> a(idx.size(), idx.size(), ring.zero());
  for (size_t r = 0; r < idx.size(); ++r)
    for (const auto& [im, c] : hecke_apply_t(ring, idx[r], k)) a(r, pos.at(im)) = c;
  return a;
}

// T_k preserves weights, so it restricts to each weight space
template <class R>
TensorOperator<R> hecke_weight_matrix(int m, int n, const R& ring, int k,
                                      const std::vector<int>& weight) {
  TensorOperator<R> out;
  out.domain_weight = weight;
  out.domain_weight.resize(static_cast<size_t>(m), 0);
  out.codomain_weight = out.domain_weight;
  out.domain_basis = weight_space(out.domain_weight, m, n);
  out.codomain_basis = out.domain_basis;
  std::map<TensorIndex, size_t> pos;
  for (size_t r = 0; r < out.domain_basis.size(); ++r) pos[out.domain_basis[r]] = r;
  out.matrix = Matrix<typename R::Elem>(out.domain_basis.size(), out.domain_basis.size(), ring.zero());
  for (size_t r = 0; r < out.domain_basis.size(); ++r)
    for (const auto& [im, c] : hecke_apply_t(ring, out.domain_basis[r], k))
      out.matrix(r, pos.at(im)) = c;
  return out;
}

// the two actions commute generator by generator; with row-convention
// matrices on both sides this is plain matrix commutation
template <class R>
bool verify_commuting_actions(int m, int n, const R& ring) {
  if (n < 2) return true;
  std::vector<Matrix<typename R::Elem>> us;
  for (int i = 1; i < m; ++i) {
    us.push_back(full_matrix(m, n, ring, u_generator_e(m, n, ring, i)));
    us.push_back(full_matrix(m, n, ring, u_generator_f(m, n, ring, i)));
    us.push_back(full_matrix(m, n, ring, u_generator_k(m, n, ring, i)));
  }
  for (int j = 1; j <= m; ++j) {
    std::vector<long> h(static_cast<size_t>(m), 0);
    h[static_cast<size_t>(j - 1)] = 1;
    us.push_back(full_matrix(m, n, ring, u_cartan(m, n, ring, h)));
  }
  for (int k = 1; k < n; ++k) {
    auto t = hecke_full_matrix(m, n, ring, k);
    for (const auto& u : us)
      if (mat_mul(ring, u, t) != mat_mul(ring, t, u)) return false;
  }
  return true;
}

// --- the weight space of a composition versus the permutation module

// the row-standard tableau with j in row i_j
inline Tableau index_tableau(const TensorIndex& idx, int m) {
  std::vector<std::vector<int>> rows(static_cast<size_t>(m));
  for (size_t j = 0; j < idx.size(); ++j) {
    int e = idx[j];
    if (e < 1 || e > m) throw std::invalid_argument("index_tableau: letter out of range");
    rows[static_cast<size_t>(e - 1)].push_back(static_cast<int>(j) + 1);
  }
  Composition shape(
      [&] {
        std::vector<int> parts;
        for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
        return parts;
      }());
  rows.resize(static_cast<size_t>(shape.length()));
  return Tableau(shape, std::move(rows));
}

// the number of pairs s < s' with i_s < i_{s'}
inline long phi_exponent(const TensorIndex& idx) {
  long count = 0;
  for (size_t s = 0; s + 1 < idx.size(); ++s)
    for (size_t t = s + 1; t < idx.size(); ++t)
      if (idx[s] < idx[t]) ++count;
  return count;
}

// matrix of the isomorphism from the la-weight space onto the module x_la H:
// rows follow the lexicographic weight-space basis, columns the row-standard
// tableau basis, and each index lands on v^N times its tableau
template <class R>
Matrix<typename R::Elem> phi_matrix(const R& ring, const Composition& la, int m) {
  if (la.length() > m) throw std::invalid_argument("phi_matrix: m too small for the shape");
  const int n = la.n();
  std::vector<int> weight(la.parts().begin(), la.parts().end());
  auto domain = weight_space(weight, m, n);
  auto tabs = row_standard_tableaux(la);
  std::map<Tableau, size_t> pos;
  for (size_t k = 0; k < tabs.size(); ++k) pos[tabs[k]] = k;
  Matrix<typename R::Elem> a(domain.size(), tabs.size(), ring.zero());
  for (size_t r = 0; r < domain.size(); ++r)
    a(r, pos.at(index_tableau(domain[r], la.length()))) = ring.v_power(phi_exponent(domain[r]));
  return a;
}

// restriction of the lowering root vector through (i, j) to the mu-weight
// space; injective over the rational function field whenever mu_i > mu_j
template <class R>
TensorOperator<R> embedding_map(int m, int n, const R& ring, const std::vector<int>& mu, int i,
                                int j) {
  if (!(1 <= i && i < j && j <= m)) throw std::invalid_argument("embedding_map: need 1 <= i < j <= m");
  std::vector<int> w = mu;
  w.resize(static_cast<size_t>(m), 0);
  if (w[static_cast<size_t>(i - 1)] - w[static_cast<size_t>(j - 1)] <= 0)
    throw std::invalid_argument("embedding_map: weight must strictly decrease from row i to row j");
  return weight_matrix(m, n, ring, root_vector(m, n, ring, j, i), w);
}

}  // namespace heckealg
