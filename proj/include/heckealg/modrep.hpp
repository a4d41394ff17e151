#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "heckealg/hecke.hpp"

namespace heckealg {

// Right module x_shape H (kind plain) or y_shape H (kind tilde) on the basis
// indexed by row-standard tableaux; generators act by the three-case rule
// that swaps the entries i, i+1 or scales, depending on their rows.
template <class R>
class PermModule {
 public:
  using Elem = typename R::Elem;

  PermModule(int n, const R& ring, const Composition& shape, MurphyKind kind = MurphyKind::plain)
      : n_(n), ring_(ring), shape_(shape), kind_(kind) {
    if (shape.n() != n) throw std::invalid_argument("PermModule: shape does not sum to n");
    basis_ = row_standard_tableaux(shape);
    for (size_t k = 0; k < basis_.size(); ++k) {
      index_[basis_[k]] = k;
      word_perm_.push_back(tableau_word(basis_[k]));
    }
    const Elem q = ring.v_power(2);
    const Elem one = ring.one();
    const Elem qm1 = q - one;
    const Elem diag_same = kind == MurphyKind::plain ? q : ring.zero() - one;
    for (int i = 1; i < n; ++i) {
      Matrix<Elem> g(basis_.size(), basis_.size(), ring.zero());
      for (size_t k = 0; k < basis_.size(); ++k) {
        const Tableau& t = basis_[k];
        int ri = t.row_of(i), ri1 = t.row_of(i + 1);
        if (ri == ri1) {
          g(k, k) = diag_same;
        } else {
          size_t j = index_.at(tableau_apply(t, Permutation::transposition(n, i)));
          if (ri < ri1) {
            g(k, j) = one;
          } else {
            g(k, j) = q;
            g(k, k) = qm1;
          }
        }
      }
      gens_.push_back(std::move(g));
    }
  }

  int n() const { return n_; }
  const R& ring() const { return ring_; }
  const Composition& shape() const { return shape_; }
  MurphyKind kind() const { return kind_; }
  const std::vector<Tableau>& basis() const { return basis_; }
  size_t dim() const { return basis_.size(); }

  size_t index_of(const Tableau& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) throw std::out_of_range("PermModule::index_of: not a basis tableau");
    return it->second;
  }

  // matrix of right multiplication by T_i; rows map basis vectors, so the
  // matrix of a product is the product of matrices in the same order
  const Matrix<Elem>& gen_matrix(int i) const {
    if (i < 1 || i >= n_) throw std::out_of_range("PermModule::gen_matrix: bad generator");
    return gens_[static_cast<size_t>(i - 1)];
  }

  Matrix<Elem> action_of_word(const std::vector<int>& word) const {
    Matrix<Elem> m = Matrix<Elem>::identity(basis_.size(), ring_.one(), ring_.zero());
    for (int i : word) m = mat_mul(ring_, m, gen_matrix(i));
    return m;
  }

  Matrix<Elem> action_of(const HeckeElt<R>& h) const {
    Matrix<Elem> acc(basis_.size(), basis_.size(), ring_.zero());
    for (const auto& [w, c] : h.terms())
      acc = mat_add(ring_, acc, mat_scale(ring_, c, action_of_word(w.reduced_word())));
    return acc;
  }

  // the basis vector as an element of H
  HeckeElt<R> basis_elt(size_t k) const {
    HeckeElt<R> x = kind_ == MurphyKind::plain ? x_elem(n_, ring_, shape_) : y_elem(n_, ring_, shape_);
    return mul_word(std::move(x), word_perm_[k].reduced_word());
  }

  // coordinates of an element of the module: the coefficient of T_{d(t)}
  // picks out the t-coordinate, since d(t) is the unique minimal-length
  // coset representative appearing in the t term
  std::vector<Elem> coords_of(const HeckeElt<R>& m, bool check = true) const {
    std::vector<Elem> c;
    c.reserve(basis_.size());
    for (size_t k = 0; k < basis_.size(); ++k) c.push_back(m.coeff(word_perm_[k]));
    if (check) {
      HeckeElt<R> back(n_, ring_);
      for (size_t k = 0; k < basis_.size(); ++k)
        if (!ring_.is_zero(c[k])) back += basis_elt(k).scaled(c[k]);
      if (!(back == m)) throw std::invalid_argument("PermModule::coords_of: element not in module");
    }
    return c;
  }

 private:
  int n_;
  R ring_;
  Composition shape_;
  MurphyKind kind_;
  std::vector<Tableau> basis_;
  std::map<Tableau, size_t> index_;
  std::vector<Permutation> word_perm_;
  std::vector<Matrix<Elem>> gens_;
};

// matrices of every T_w on the module, aligned with perms (built shortest
// first, each from a one-generator extension)
template <class R>
std::vector<Matrix<typename R::Elem>> action_table(const PermModule<R>& M,
                                                   const std::vector<Permutation>& perms) {
  std::map<Permutation, size_t> pos;
  for (size_t i = 0; i < perms.size(); ++i) pos[perms[i]] = i;
  std::vector<size_t> order(perms.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return perms[a].length() < perms[b].length(); });
  std::vector<Matrix<typename R::Elem>> table(perms.size());
  for (size_t oi : order) {
    const Permutation& w = perms[oi];
    if (w.is_identity()) {
      table[oi] = Matrix<typename R::Elem>::identity(M.dim(), M.ring().one(), M.ring().zero());
      continue;
    }
    int i = 0;
    for (int k = 1; k < w.n(); ++k)
      if (w.right_descent(k)) { i = k; break; }
    Permutation parent = w.times_s(i);
    table[oi] = mat_mul(M.ring(), table[pos.at(parent)], M.gen_matrix(i));
  }
  return table;
}

// independent product route: true when g kills every basis vector under
// exact multiplication in H
template <class R>
bool annihilates_module(const PermModule<R>& M, const HeckeElt<R>& g) {
  for (size_t k = 0; k < M.dim(); ++k)
    if (!hecke_mul(M.basis_elt(k), g).is_zero()) return false;
  return true;
}

template <class R>
struct IdealBasis {
  std::string description;
  int n = 0;
  std::vector<HeckeElt<R>> elements;
};

// span of the cellular basis elements with shape in the set P given by the
// predicate; P must be closed upward under dominance, which is exactly the
// condition for the span to be a two-sided ideal
template <class R>
IdealBasis<R> cell_ideal_basis(int n, const R& ring, const std::function<bool(const Partition&)>& pred,
                               bool sharped, const std::string& description) {
  auto shapes = partitions_of(n);
  std::vector<char> in_p(shapes.size());
  for (size_t i = 0; i < shapes.size(); ++i) in_p[i] = pred(shapes[i]) ? 1 : 0;
  for (size_t i = 0; i < shapes.size(); ++i) {
    if (!in_p[i]) continue;
    for (size_t j = 0; j < shapes.size(); ++j)
      if (!in_p[j] && dominates(shapes[j], shapes[i]))
        throw std::invalid_argument("cell_ideal_basis: shape set is not closed upward");
  }
  IdealBasis<R> out{description, n, {}};
  for (size_t i = 0; i < shapes.size(); ++i) {
    if (!in_p[i]) continue;
    auto tabs = standard_tableaux(shapes[i]);
    for (const Tableau& s : tabs)
      for (const Tableau& t : tabs) {
        auto e = murphy_elt(n, ring, shapes[i], s, t);
        out.elements.push_back(sharped ? sharp(e) : e);
      }
  }
  return out;
}

// the closed-form annihilator of x_la H: sharp images of the cellular
// elements whose shape does not lie below the transpose of la
template <class R>
IdealBasis<R> annihilator_closed(int n, const R& ring, const Partition& la) {
  Partition lat = la.transpose();
  return cell_ideal_basis<R>(
      n, ring, [&](const Partition& mu) { return !dominates(lat, mu); }, true,
      "annihilator_closed(" + la.str() + ")");
}

// the number of cellular pairs the closed-form annihilator has
long annihilator_closed_rank(int n, const Partition& la);

// rank of the quotient by the closed-form annihilator, computed two ways
long quotient_cellular_rank(int n, const Partition& la);

// brute-force annihilator of the module over a field: stack, for each basis
// vector, the coordinates of its image under every T_w, and take the kernel
// in T-coordinates
template <class F>
std::vector<HeckeElt<F>> annihilator_kernel(const PermModule<F>& M) {
  static_assert(F::is_field);
  const F& field = M.ring();
  auto perms = all_permutations(M.n());
  auto table = action_table(M, perms);
  size_t d = M.dim();
  Matrix<typename F::Elem> k(d * d, perms.size(), field.zero());
  for (size_t j = 0; j < perms.size(); ++j)
    for (size_t t = 0; t < d; ++t)
      for (size_t u = 0; u < d; ++u) k(t * d + u, j) = table[j](t, u);
  auto null_vecs = kernel_basis(field, k);
  std::vector<HeckeElt<F>> out;
  out.reserve(null_vecs.size());
  for (const auto& v : null_vecs) out.push_back(elt_from_coords(M.n(), field, perms, v));
  return out;
}

// annihilator of an abstract right module given by a basis of elements of H
// and a coordinate map (used for ideals and their quotients)
template <class F>
std::vector<HeckeElt<F>> annihilator_of(
    const F& field, int n, const std::vector<HeckeElt<F>>& module_basis,
    const std::function<std::vector<typename F::Elem>(const HeckeElt<F>&)>& coords) {
  static_assert(F::is_field);
  auto perms = all_permutations(n);
  std::vector<std::vector<std::vector<typename F::Elem>>> blocks;
  size_t coord_dim = 0;
  for (const auto& b : module_basis) {
    std::vector<std::vector<typename F::Elem>> col;
    col.reserve(perms.size());
    for (const auto& w : perms) col.push_back(coords(mul_word(b, w.reduced_word())));
    coord_dim = col.front().size();
    blocks.push_back(std::move(col));
  }
  Matrix<typename F::Elem> k(module_basis.size() * coord_dim, perms.size(), field.zero());
  for (size_t bi = 0; bi < blocks.size(); ++bi)
    for (size_t j = 0; j < perms.size(); ++j)
      for (size_t c = 0; c < coord_dim; ++c) k(bi * coord_dim + c, j) = blocks[bi][j][c];
  auto null_vecs = kernel_basis(field, k);
  std::vector<HeckeElt<F>> out;
  out.reserve(null_vecs.size());
  for (const auto& v : null_vecs) out.push_back(elt_from_coords(n, field, perms, v));
  return out;
}

// cellular-coordinate machinery over a field, built once per (n, field)
template <class F>
class CellContext {
 public:
  CellContext(int n, const F& field)
      : basis_(std::make_unique<MurphyBasis<F>>(murphy_basis(n, field))), solver_(*basis_) {}

  const MurphyBasis<F>& basis() const { return *basis_; }
  const MurphySolver<F>& solver() const { return solver_; }

 private:
  std::unique_ptr<MurphyBasis<F>> basis_;
  MurphySolver<F> solver_;
};

// structure coefficients r_h(t, u) of the cell module of shape la: expand
// x_{s,t} h on the cellular basis and read the row of coefficients at
// (la, s, -), discarding shapes strictly above; coefficients at any shape
// not above la, or at pairs with a different first tableau, must vanish
template <class F>
Matrix<typename F::Elem> cell_module_structure(const CellContext<F>& ctx, const Partition& la,
                                               const HeckeElt<F>& h, const Tableau* s_choice = nullptr) {
  const auto& mb = ctx.basis();
  const F& field = mb.ring;
  Tableau s = s_choice ? *s_choice : Tableau::row_filled(la);
  auto tabs = standard_tableaux(la);
  std::map<Tableau, size_t> tab_pos;
  for (size_t i = 0; i < tabs.size(); ++i) tab_pos[tabs[i]] = i;
  Matrix<typename F::Elem> r(tabs.size(), tabs.size(), field.zero());
  for (size_t ti = 0; ti < tabs.size(); ++ti) {
    auto z = hecke_mul(murphy_elt(mb.n, field, la, s, tabs[ti]), h);
    auto c = ctx.solver().coords(z);
    for (size_t j = 0; j < mb.index.size(); ++j) {
      if (field.is_zero(c[j])) continue;
      const MurphyIndex& mi = mb.index[j];
      if (dominates(mi.shape, la, true)) continue;
      if (!(mi.shape == la) || !(mi.s == s))
        throw std::logic_error("cell_module_structure: expansion leaves the cell filtration");
      r(ti, tab_pos.at(mi.t)) = c[j];
    }
  }
  return r;
}

// basis of the right ideal generated by the product of the row-sum element,
// the column word, and the signed column-shape element; over a field the
// translates reduce to |Std(la)| independent rows
template <class F>
IdealBasis<F> specht_ideal(int n, const F& field, const Partition& la) {
  static_assert(F::is_field);
  HeckeElt<F> z = x_elem(n, field, la);
  z = mul_word(std::move(z), col_word(la).reduced_word());
  z = hecke_mul(z, y_elem(n, field, la.transpose()));
  auto perms = all_permutations(n);
  std::map<Permutation, size_t> pos;
  for (size_t i = 0; i < perms.size(); ++i) pos[perms[i]] = i;
  Matrix<typename F::Elem> rows(perms.size(), perms.size(), field.zero());
  for (size_t j = 0; j < perms.size(); ++j) {
    auto zc = elt_coords(mul_word(z, perms[j].reduced_word()), pos);
    for (size_t c = 0; c < zc.size(); ++c) rows(j, c) = zc[c];
  }
  auto ech = bareiss_echelon(field, rows);
  IdealBasis<F> out{"specht_ideal(" + la.str() + ")", n, {}};
  for (size_t i = 0; i < ech.rank(); ++i) {
    auto v = ech.mat.row(i);
    normalize_vector(field, v);
    out.elements.push_back(elt_from_coords(n, field, perms, v));
  }
  return out;
}

struct AnnihilatorReport {
  Partition lambda;
  RingSpec ring;
  long closed_rank = 0;
  long kernel_rank = 0;
  bool containment = false;
  bool equality = false;
};

struct SpecializationCheck {
  RingSpec ring;
  SemisimpleVerdict verdict;
  AnnihilatorReport report;
};

struct IntegralAnnihilatorReport {
  Partition lambda;
  bool containment_integral = false;
  AnnihilatorReport generic;
  std::vector<SpecializationCheck> specializations;
  bool certified = false;
};

// containment + kernel comparison over one field
AnnihilatorReport verify_annihilator(const RingSpec& spec, const Partition& la);

// the integral certificate: exact containment over the Laurent ring,
// equality over Q(v), and kernel comparison at each specialization (equality
// is expected exactly at the semisimple ones)
IntegralAnnihilatorReport verify_annihilator_integral(const Partition& la,
                                                      const std::vector<RingSpec>& specials);
std::vector<RingSpec> default_specializations();

struct AnnihilatorTriple {
  Partition lambda;
  RingSpec ring;
  long ideal_rank = 0;
  long quotient_rank = 0;
  long module_rank = 0;
  bool ideal_eq_quotient = false;
  bool quotient_eq_module = false;
  bool ideal_eq_module = false;
  bool all_equal = false;
};

// annihilators of the ideal H[>=la], of its quotient by H[>la], and of the
// module x_la H, compared as subspaces
AnnihilatorTriple annihilator_equalities(const RingSpec& spec, const Partition& la);

// the untwisted cellular elements with shape not below la', which kill the
// signed module y_la H
template <class R>
IdealBasis<R> twisted_annihilator(int n, const R& ring, const Partition& la) {
  Partition lat = la.transpose();
  return cell_ideal_basis<R>(
      n, ring, [&](const Partition& mu) { return !dominates(lat, mu); }, false,
      "twisted_annihilator(" + la.str() + ")");
}

// T-coordinate matrix of a list of elements (rows)
template <class R>
Matrix<typename R::Elem> coord_matrix(int n, const R& ring, const std::vector<HeckeElt<R>>& elts) {
  auto perms = all_permutations(n);
  std::map<Permutation, size_t> pos;
  for (size_t i = 0; i < perms.size(); ++i) pos[perms[i]] = i;
  Matrix<typename R::Elem> m(elts.size(), perms.size(), ring.zero());
  for (size_t i = 0; i < elts.size(); ++i) {
    auto c = elt_coords(elts[i], pos);
    for (size_t j = 0; j < c.size(); ++j) m(i, j) = c[j];
  }
  return m;
}

}  // namespace heckealg
