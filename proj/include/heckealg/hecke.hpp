#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heckealg/matrix.hpp"
#include "heckealg/perm.hpp"

namespace heckealg {

// Element of the Iwahori-Hecke algebra of S_n over the ring R, stored on the
// T-basis indexed by permutations.  The deformation parameter is q = v^2.
// Generators satisfy (T_i + 1)(T_i - q) = 0 together with the braid
// relations, and T_w T_i expands by whether the length rises or falls.
template <class R>
class HeckeElt {
 public:
  using Elem = typename R::Elem;

  HeckeElt(int n, const R& ring) : n_(n), ring_(ring) {
    if (n < 1) throw std::invalid_argument("HeckeElt: n must be >= 1");
  }

  int n() const { return n_; }
  const R& ring() const { return ring_; }
  const std::map<Permutation, Elem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  Elem coeff(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  void add_term(const Permutation& w, const Elem& c) {
    if (w.n() != n_) throw std::invalid_argument("HeckeElt::add_term: wrong n");
    if (ring_.is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  HeckeElt& operator+=(const HeckeElt& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  HeckeElt& operator-=(const HeckeElt& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, ring_.zero() - c);
    return *this;
  }
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { a += b; return a; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { a -= b; return a; }

  HeckeElt scaled(const Elem& c) const {
    HeckeElt out(n_, ring_);
    if (ring_.is_zero(c)) return out;
    for (const auto& [w, x] : terms_) out.add_term(w, x * c);
    return out;
  }

  bool operator==(const HeckeElt& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + ring_.str(c) + ")*T" + w.str();
    }
    return out;
  }

 private:
  int n_;
  R ring_;
  std::map<Permutation, Elem> terms_;
};

template <class R>
HeckeElt<R> hecke_zero(int n, const R& ring) {
  return HeckeElt<R>(n, ring);
}

template <class R>
HeckeElt<R> hecke_one(int n, const R& ring) {
  HeckeElt<R> e(n, ring);
  e.add_term(Permutation(n), ring.one());
  return e;
}

template <class R>
HeckeElt<R> t_basis(int n, const R& ring, const Permutation& w) {
  HeckeElt<R> e(n, ring);
  e.add_term(w, ring.one());
  return e;
}

// right multiplication by the generator T_i
template <class R>
HeckeElt<R> mul_gen(const HeckeElt<R>& a, int i) {
  using Elem = typename R::Elem;
  const R& ring = a.ring();
  HeckeElt<R> out(a.n(), ring);
  // GMP coefficient types use expression templates, so force evaluation into
  // concrete elements rather than capturing mixed expressions with auto
  const Elem q = ring.v_power(2);
  const Elem qm1 = q - ring.one();
  for (const auto& [w, c] : a.terms()) {
    Permutation ws = w.times_s(i);
    if (w.right_descent(i)) {
      out.add_term(ws, c * q);
      out.add_term(w, c * qm1);
    } else {
      out.add_term(ws, c);
    }
  }
  return out;
}

template <class R>
HeckeElt<R> mul_word(HeckeElt<R> a, const std::vector<int>& word) {
  for (int i : word) a = mul_gen(a, i);
  return a;
}

template <class R>
HeckeElt<R> hecke_mul(const HeckeElt<R>& a, const HeckeElt<R>& b) {
  if (a.n() != b.n()) throw std::invalid_argument("hecke_mul: mismatched n");
  HeckeElt<R> out(a.n(), a.ring());
  for (const auto& [w, c] : b.terms()) {
    HeckeElt<R> part = mul_word(a, w.reduced_word()).scaled(c);
    out += part;
  }
  return out;
}

// inverse of the basis element T_w, using T_i^{-1} = q^{-1} T_i + (q^{-1}-1)
template <class R>
HeckeElt<R> t_inverse(int n, const R& ring, const Permutation& w) {
  using Elem = typename R::Elem;
  const Elem qinv = ring.v_power(-2);
  const Elem shift = qinv - ring.one();
  HeckeElt<R> x = hecke_one(n, ring);
  auto word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    HeckeElt<R> y = mul_gen(x, *it).scaled(qinv);
    y += x.scaled(shift);
    x = std::move(y);
  }
  return x;
}

// the anti-automorphism * fixing generators: T_w -> T_{w^{-1}}
template <class R>
HeckeElt<R> star(const HeckeElt<R>& a) {
  HeckeElt<R> out(a.n(), a.ring());
  for (const auto& [w, c] : a.terms()) out.add_term(w.inverse(), c);
  return out;
}

// the anti-automorphism T_w -> (-q)^{l(w)} (T_w)^{-1}
template <class R>
HeckeElt<R> dagger(const HeckeElt<R>& a) {
  const R& ring = a.ring();
  HeckeElt<R> out(a.n(), ring);
  for (const auto& [w, c] : a.terms()) {
    int l = w.length();
    typename R::Elem f = ring.v_power(2 * l);
    if (l % 2) f = ring.zero() - f;
    out += t_inverse(a.n(), ring, w).scaled(c * f);
  }
  return out;
}

// the algebra automorphism T_w -> (-q)^{l(w)} (T_{w^{-1}})^{-1}, the
// composite of the two anti-automorphisms above
template <class R>
HeckeElt<R> sharp(const HeckeElt<R>& a) {
  const R& ring = a.ring();
  HeckeElt<R> out(a.n(), ring);
  for (const auto& [w, c] : a.terms()) {
    int l = w.length();
    typename R::Elem f = ring.v_power(2 * l);
    if (l % 2) f = ring.zero() - f;
    out += t_inverse(a.n(), ring, w.inverse()).scaled(c * f);
  }
  return out;
}

// left multiplication by T_u, routed through * to reuse the right action
template <class R>
HeckeElt<R> lmul_t(const Permutation& u, const HeckeElt<R>& z) {
  return star(mul_word(star(z), u.inverse().reduced_word()));
}

// sum of T_w over the Young subgroup of the composition
template <class R>
HeckeElt<R> x_elem(int n, const R& ring, const Composition& shape) {
  if (shape.n() != n) throw std::invalid_argument("x_elem: shape does not sum to n");
  HeckeElt<R> out(n, ring);
  for (const Permutation& w : young_subgroup(shape)) out.add_term(w, ring.one());
  return out;
}

// signed companion: sum of (-q)^{-l(w)} T_w over the Young subgroup
template <class R>
HeckeElt<R> y_elem(int n, const R& ring, const Composition& shape) {
  if (shape.n() != n) throw std::invalid_argument("y_elem: shape does not sum to n");
  HeckeElt<R> out(n, ring);
  for (const Permutation& w : young_subgroup(shape)) {
    int l = w.length();
    typename R::Elem c = ring.v_power(-2 * l);
    if (l % 2) c = ring.zero() - c;
    out.add_term(w, c);
  }
  return out;
}

enum class MurphyKind { plain, tilde };

struct MurphyIndex {
  Partition shape;
  Tableau s, t;
  std::string str() const { return shape.str() + "|" + s.str() + "|" + t.str(); }
};

// the cellular basis element indexed by a pair of standard tableaux:
// T*_{d(s)} x_shape T_{d(t)} (kind plain), or the same with y (kind tilde);
// s and t may more generally be row-standard
template <class R>
HeckeElt<R> murphy_elt(int n, const R& ring, const Composition& shape, const Tableau& s,
                       const Tableau& t, MurphyKind kind = MurphyKind::plain) {
  if (s.shape() != shape || t.shape() != shape)
    throw std::invalid_argument("murphy_elt: tableaux must have the given shape");
  if (!s.is_row_standard() || !t.is_row_standard())
    throw std::invalid_argument("murphy_elt: tableaux must be row-standard");
  HeckeElt<R> mid = kind == MurphyKind::plain ? x_elem(n, ring, shape) : y_elem(n, ring, shape);
  HeckeElt<R> right = mul_word(std::move(mid), tableau_word(t).reduced_word());
  return lmul_t(tableau_word(s).inverse(), right);
}

// evaluation of the two one-dimensional representations
template <class R>
typename R::Elem trivial_rep(const HeckeElt<R>& a) {
  const R& ring = a.ring();
  auto acc = ring.zero();
  for (const auto& [w, c] : a.terms()) acc += c * ring.v_power(2 * w.length());
  return acc;
}

template <class R>
typename R::Elem sign_rep(const HeckeElt<R>& a) {
  const R& ring = a.ring();
  auto acc = ring.zero();
  for (const auto& [w, c] : a.terms()) {
    if (w.length() % 2) acc -= c;
    else acc += c;
  }
  return acc;
}

// the bilinear form (a, b) = coefficient of the identity in a b*
template <class R>
typename R::Elem bilinear_form(const HeckeElt<R>& a, const HeckeElt<R>& b) {
  return hecke_mul(a, star(b)).coeff(Permutation(a.n()));
}

// same value through T-basis orthogonality: (T_u, T_w) = delta q^{l(w)}
template <class R>
typename R::Elem bilinear_form_fast(const HeckeElt<R>& a, const HeckeElt<R>& b) {
  if (a.n() != b.n()) throw std::invalid_argument("bilinear_form_fast: mismatched n");
  const R& ring = a.ring();
  auto acc = ring.zero();
  const auto& at = a.terms();
  const auto& bt = b.terms();
  auto ia = at.begin();
  auto ib = bt.begin();
  while (ia != at.end() && ib != bt.end()) {
    if (ia->first < ib->first) ++ia;
    else if (ib->first < ia->first) ++ib;
    else {
      acc += ia->second * ib->second * ring.v_power(2 * ia->first.length());
      ++ia;
      ++ib;
    }
  }
  return acc;
}

// coefficient change along v |-> image, from the generic integral form
template <class R2>
HeckeElt<R2> specialize_elt(const HeckeElt<LaurentRing>& a, const R2& ring) {
  HeckeElt<R2> out(a.n(), ring);
  for (const auto& [w, c] : a.terms()) out.add_term(w, ring.from_laurent(c));
  return out;
}

inline HeckeElt<RationalFunctionField> embed_rf(const HeckeElt<LaurentRing>& a) {
  return specialize_elt(a, RationalFunctionField{});
}

// exact descent from Q(v) to integral Laurent coefficients when possible
inline std::optional<HeckeElt<LaurentRing>> rf_to_laurent(const HeckeElt<RationalFunctionField>& a) {
  HeckeElt<LaurentRing> out(a.n(), LaurentRing{});
  for (const auto& [w, c] : a.terms()) {
    auto l = c.as_laurent();
    if (!l) return std::nullopt;
    out.add_term(w, *l);
  }
  return out;
}

// Print sum c_w * w with each permutation in cycle notation, e.g.
// "(34) - (12)(34) + 2*(123)".  Meaningful at v = 1, where the T-basis is the
// group basis; terms appear in one-line lexicographic order.
template <class R>
std::string group_algebra_str(const HeckeElt<R>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    std::string cs = a.ring().str(c);
    bool neg = !cs.empty() && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != "1") out += mag + "*";
    out += w.cycles_str();
  }
  return out;
}

template <class R>
std::vector<typename R::Elem> elt_coords(const HeckeElt<R>& a,
                                         const std::map<Permutation, size_t>& pos) {
  std::vector<typename R::Elem> out(pos.size(), a.ring().zero());
  for (const auto& [w, c] : a.terms()) {
    auto it = pos.find(w);
    if (it == pos.end()) throw std::logic_error("elt_coords: unknown permutation");
    out[it->second] = c;
  }
  return out;
}

template <class R>
HeckeElt<R> elt_from_coords(int n, const R& ring, const std::vector<Permutation>& perms,
                            const std::vector<typename R::Elem>& coords) {
  HeckeElt<R> out(n, ring);
  for (size_t i = 0; i < perms.size(); ++i) out.add_term(perms[i], coords[i]);
  return out;
}

// The full cellular basis: all murphy_elt over pairs of standard tableaux,
// shapes in descending lexicographic order (which refines dominance
// downward), tableau pairs in enumeration order with s outer.  The
// change-of-basis matrix has T-coordinates in its columns.
template <class R>
struct MurphyBasis {
  int n;
  R ring;
  std::vector<MurphyIndex> index;
  std::vector<HeckeElt<R>> elements;
  std::vector<Permutation> perms;
  std::map<Permutation, size_t> perm_pos;
  Matrix<typename R::Elem> change_of_basis;

  size_t find(const Partition& shape, const Tableau& s, const Tableau& t) const {
    for (size_t i = 0; i < index.size(); ++i)
      if (index[i].shape == shape && index[i].s == s && index[i].t == t) return i;
    throw std::out_of_range("MurphyBasis::find: no such index");
  }
};

template <class R>
MurphyBasis<R> murphy_basis(int n, const R& ring, MurphyKind kind = MurphyKind::plain) {
  MurphyBasis<R> mb{n, ring, {}, {}, all_permutations(n), {}, {}};
  for (size_t i = 0; i < mb.perms.size(); ++i) mb.perm_pos[mb.perms[i]] = i;
  for (const Partition& shape : partitions_of(n)) {
    auto tabs = standard_tableaux(shape);
    for (const Tableau& s : tabs)
      for (const Tableau& t : tabs) {
        mb.index.push_back(MurphyIndex{shape, s, t});
        mb.elements.push_back(murphy_elt(n, ring, shape, s, t, kind));
      }
  }
  if (mb.index.size() != mb.perms.size())
    throw std::logic_error("murphy_basis: index size mismatch");
  mb.change_of_basis = Matrix<typename R::Elem>(mb.perms.size(), mb.index.size(), ring.zero());
  for (size_t j = 0; j < mb.elements.size(); ++j)
    for (const auto& [w, c] : mb.elements[j].terms())
      mb.change_of_basis(mb.perm_pos.at(w), j) = c;
  return mb;
}

// coordinates on the cellular basis over a field, with the elimination work
// shared across solves
template <class F>
class MurphySolver {
 public:
  explicit MurphySolver(const MurphyBasis<F>& mb)
      : mb_(&mb), solver_(mb.ring, mb.change_of_basis) {}

  std::vector<typename F::Elem> coords(const HeckeElt<F>& h) const {
    return solver_.solve(elt_coords(h, mb_->perm_pos));
  }

  const MurphyBasis<F>& basis() const { return *mb_; }

 private:
  const MurphyBasis<F>* mb_;
  LinearSolver<F> solver_;
};

}  // namespace heckealg
