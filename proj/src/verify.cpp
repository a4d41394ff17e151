#include "heckealg/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "heckealg/modrep.hpp"
#include "heckealg/tensor.hpp"

namespace heckealg {

namespace {

// Shared state for one suite run: the accumulating result, the effective
// ceiling, and a deterministic generator for the randomized checks.
struct Ctx {
  SuiteResult res;
  int max_n;
  std::mt19937_64 rng;

  Ctx(const std::string& name, const VerifyOptions& opt) : max_n(opt.max_n), rng(opt.seed) {
    res.name = name;
  }
  int cap(int stated) const { return std::min(stated, max_n); }
  void check(bool ok, const std::string& what) {
    ++res.checks;
    if (!ok) {
      ++res.failures;
      res.notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { res.notes.push_back(s); }

  Permutation random_perm(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_one_line(std::move(img));
  }

  template <class R>
  HeckeElt<R> random_elt(int n, const R& ring, int nterms) {
    HeckeElt<R> out(n, ring);
    std::uniform_int_distribution<int> cdist(-4, 4);
    std::uniform_int_distribution<long> edist(-2, 2);
    for (int k = 0; k < nterms; ++k) {
      int c = cdist(rng);
      if (c == 0) c = 1;
      out.add_term(random_perm(n), ring.from_int(c) * ring.v_power(edist(rng)));
    }
    return out;
  }
};

template <class F>
std::vector<std::vector<typename F::Elem>> rows_of(const F& field, int n,
                                                   const std::vector<HeckeElt<F>>& elts) {
  auto m = coord_matrix(n, field, elts);
  std::vector<std::vector<typename F::Elem>> rows;
  rows.reserve(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

long longest_length(const Composition& shape) {
  long acc = 0;
  for (long p : shape.parts()) acc += p * (p - 1) / 2;
  return acc;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::map<Permutation, size_t> perm_positions(int n) {
  std::map<Permutation, size_t> pos;
  auto perms = all_permutations(n);
  for (size_t k = 0; k < perms.size(); ++k) pos[perms[k]] = k;
  return pos;
}

std::vector<int> padded(const Composition& c, int m) {
  std::vector<int> w(c.parts().begin(), c.parts().end());
  w.resize(static_cast<size_t>(m), 0);
  return w;
}

// invert a matrix with exactly one nonzero entry in every row and column
template <class Fld>
Matrix<typename Fld::Elem> monomial_inverse(const Fld& field,
                                            const Matrix<typename Fld::Elem>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("monomial_inverse: not square");
  Matrix<typename Fld::Elem> inv(a.rows(), a.rows(), field.zero());
  for (size_t r = 0; r < a.rows(); ++r) {
    size_t hits = 0;
    for (size_t c = 0; c < a.cols(); ++c) {
      if (field.is_zero(a(r, c))) continue;
      inv(c, r) = field.div(field.one(), a(r, c));
      ++hits;
    }
    if (hits != 1) throw std::invalid_argument("monomial_inverse: not a monomial matrix");
  }
  return inv;
}

SuiteResult suite_involutions(const VerifyOptions& opt) {
  Ctx cx("involutions", opt);
  LaurentRing A;
  for (int n = 2; n <= cx.cap(4); ++n) {
    for (int it = 0; it < 6; ++it) {
      auto a = cx.random_elt(n, A, 4), b = cx.random_elt(n, A, 4);
      auto ab = hecke_mul(a, b);
      cx.check(star(star(a)) == a, "star is an involution");
      cx.check(star(ab) == hecke_mul(star(b), star(a)), "star reverses products");
      cx.check(dagger(dagger(a)) == a, "dagger is an involution");
      cx.check(dagger(ab) == hecke_mul(dagger(b), dagger(a)), "dagger reverses products");
      cx.check(sharp(sharp(a)) == a, "sharp is an involution");
      cx.check(sharp(ab) == hecke_mul(sharp(a), sharp(b)), "sharp preserves products");
      cx.check(sharp(a) == star(dagger(a)) && sharp(a) == dagger(star(a)),
               "sharp factors through star and dagger in either order");
    }
    for (const Permutation& w : all_permutations(n))
      cx.check(star(t_basis(n, A, w)) == t_basis(n, A, w.inverse()),
               "star sends T_w to the inverse element");
    RationalAtQ q1{Rat(1)};
    for (const Permutation& w : all_permutations(n)) {
      auto expect = t_basis(n, q1, w).scaled(w.length() % 2 ? Rat(-1) : Rat(1));
      cx.check(sharp(t_basis(n, q1, w)) == expect, "at v = 1 sharp is the sign twist");
    }
  }
  auto q = A.v_power(2);
  auto t1 = t_basis(3, A, Permutation::transposition(3, 1));
  cx.check(dagger(t1) == hecke_one(3, A).scaled(q - A.one()) - t1,
           "dagger of a generator is (q - 1) - T_i");
  return cx.res;
}

SuiteResult suite_murphy(const VerifyOptions& opt) {
  Ctx cx("murphy", opt);
  LaurentRing A;
  RationalFunctionField F;

  for (int n = 2; n <= cx.cap(4); ++n) {
    for (const Composition& shape : compositions_of(n)) {
      auto lhs = sharp(x_elem(n, A, shape));
      auto rhs = y_elem(n, A, shape).scaled(A.v_power(2 * longest_length(shape)));
      cx.check(lhs == rhs, "sharp carries x onto y times the unit v^{2 l(w_shape)}");
    }

    auto mb = murphy_basis(n, A);
    cx.check(mb.index.size() == mb.perms.size(), "cellular basis has full size");
    LaurentPoly det = det_domain(A, mb.change_of_basis);
    cx.check(det.is_unit() && (det.unit_part().sign == 1 || det.unit_part().sign == -1),
             "change of basis from the T-basis has determinant +/- v^k");

    for (const Partition& shape : partitions_of(n)) {
      auto tabs = standard_tableaux(shape);
      for (const Tableau& s : tabs)
        for (const Tableau& t : tabs)
          cx.check(star(murphy_elt(n, A, shape, s, t)) == murphy_elt(n, A, shape, t, s),
                   "star exchanges the tableau pair");
    }
  }

  // straightening: a row-standard right tableau expands into standard ones
  // with coefficients that do not depend on the left tableau, modulo terms of
  // strictly larger shape
  for (int n = 2; n <= cx.cap(4); ++n) {
    auto mbf = murphy_basis(n, F);
    MurphySolver<RationalFunctionField> solver(mbf);
    for (const Partition& la : partitions_of(n)) {
      auto std_tabs = standard_tableaux(la);
      for (const Tableau& t : row_standard_tableaux(la)) {
        if (t.is_standard()) continue;
        bool have_ref = false;
        std::map<Tableau, RationalFunction> ref;
        for (const Tableau& s : std_tabs) {
          auto c = solver.coords(murphy_elt(n, F, la, s, t));
          std::map<Tableau, RationalFunction> same_layer;
          bool support_ok = true;
          for (size_t k = 0; k < c.size(); ++k) {
            if (F.is_zero(c[k])) continue;
            const auto& [mu, u, w] = mbf.index[k];
            if (mu == la) {
              if (u == s) same_layer[w] = c[k];
              else support_ok = false;
            } else if (!dominates(mu, la, true)) {
              support_ok = false;
            }
          }
          cx.check(support_ok,
                   "straightening stays in the layer of the left tableau plus larger shapes");
          if (!have_ref) {
            ref = same_layer;
            have_ref = true;
          } else {
            cx.check(same_layer == ref,
                     "straightening coefficients are independent of the left tableau");
          }
        }
      }
    }
  }

  // right multiples of x_la indexed by standard tableaux are independent
  for (int n = 2; n <= cx.cap(4); ++n)
    for (const Partition& la : partitions_of(n)) {
      auto ideal = specht_ideal(n, F, la);
      cx.check(ideal.elements.size() == standard_tableau_count(la),
               "one element for every standard tableau");
      cx.check(row_space_rank(F, rows_of(F, n, ideal.elements)) ==
                   static_cast<long>(ideal.elements.size()),
               "the elements are linearly independent");
    }
  return cx.res;
}

SuiteResult suite_bilinear(const VerifyOptions& opt) {
  Ctx cx("bilinear", opt);
  LaurentRing A;
  for (int n = 2; n <= cx.cap(3); ++n)
    for (const Permutation& u : all_permutations(n))
      for (const Permutation& w : all_permutations(n)) {
        auto val = bilinear_form(t_basis(n, A, u), t_basis(n, A, w));
        if (u == w) cx.check(val == A.v_power(2 * u.length()), "T-basis norm is q^{l(w)}");
        else cx.check(val.is_zero(), "distinct T-basis elements are orthogonal");
      }

  for (int n = 2; n <= cx.cap(4); ++n)
    for (int it = 0; it < 8; ++it) {
      auto a = cx.random_elt(n, A, 5), b = cx.random_elt(n, A, 5), d = cx.random_elt(n, A, 3);
      cx.check(bilinear_form_fast(a, b) == bilinear_form(a, b),
               "orthogonality route agrees with the definition");
      cx.check(bilinear_form(a, b) == bilinear_form(b, a), "the form is symmetric");
      cx.check(bilinear_form(hecke_mul(a, d), b) == bilinear_form(a, hecke_mul(b, star(d))),
               "right multiplication moves across the form through star");
      cx.check(bilinear_form(hecke_mul(d, a), b) == bilinear_form(a, hecke_mul(star(d), b)),
               "left multiplication moves across the form through star");
    }

  // Gram matrix of the cellular basis against its sharp twist is unimodular
  for (int n = 2; n <= cx.cap(3); ++n) {
    auto mb = murphy_basis(n, A);
    size_t d = mb.elements.size();
    std::vector<HeckeElt<LaurentRing>> sharped;
    sharped.reserve(d);
    for (const auto& e : mb.elements) sharped.push_back(sharp(e));
    Matrix<LaurentPoly> gram(d, d, A.zero());
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) gram(i, j) = bilinear_form_fast(mb.elements[i], sharped[j]);
    cx.check(det_domain(A, gram).is_unit(),
             "Gram matrix against the sharp twist has unit determinant");
  }
  return cx.res;
}

SuiteResult suite_pairing(const VerifyOptions& opt) {
  Ctx cx("pairing", opt);
  LaurentRing A;
  for (int n = 2; n <= cx.cap(4); ++n) {
    auto mb = murphy_basis(n, A);
    std::vector<HeckeElt<LaurentRing>> sharped;
    sharped.reserve(mb.elements.size());
    for (const auto& e : mb.elements) sharped.push_back(sharp(e));

    for (size_t i = 0; i < mb.index.size(); ++i)
      for (size_t j = 0; j < mb.index.size(); ++j) {
        const auto& [shape_st, s, t] = mb.index[i];
        const auto& [shape_uw, u, w] = mb.index[j];
        auto val = bilinear_form_fast(mb.elements[i], sharped[j]);
        bool allowed =
            tableau_dominates(u.transposed(), s) && tableau_dominates(w.transposed(), t);
        if (!allowed)
          cx.check(val.is_zero(), "pairing vanishes outside the dominance cone");
        if (shape_st == shape_uw.transpose() && s == u.transposed() && w.transposed() == t) {
          bool unit = val.is_unit();
          cx.check(unit, "matched pairs pair to a unit");
          if (unit) {
            long b = col_word(shape_uw).length() + longest_length(shape_uw);
            cx.check(val.unit_part().exp == 2 * b, "matched pairs pair to +/- v^{2b}");
          }
        }
      }

    // row-standard tableaux of arbitrary composition shape on the plain side
    for (const Composition& shape : compositions_of(n)) {
      auto rs = row_standard_tableaux(shape);
      for (const Tableau& s : rs)
        for (const Tableau& t : rs) {
          auto elt = murphy_elt(n, A, shape, s, t);
          for (size_t j = 0; j < mb.index.size(); ++j) {
            const auto& [mu, u, w] = mb.index[j];
            if (tableau_dominates(u.transposed(), s) && tableau_dominates(w.transposed(), t))
              continue;
            cx.check(bilinear_form_fast(elt, sharped[j]).is_zero(),
                     "row-standard pairing vanishes outside the dominance cone");
          }
        }
    }
  }
  return cx.res;
}

SuiteResult suite_permmodule(const VerifyOptions& opt) {
  Ctx cx("permmodule", opt);
  LaurentRing A;
  RationalFunctionField F;
  auto q = A.v_power(2);

  for (int n = 2; n <= cx.cap(4); ++n)
    for (const Composition& shape : compositions_of(n)) {
      PermModule<LaurentRing> m(n, A, shape);
      auto id = Matrix<LaurentPoly>::identity(m.dim(), A.one(), A.zero());
      for (int i = 1; i < n; ++i) {
        const auto& g = m.gen_matrix(i);
        cx.check(mat_mul(A, g, g) ==
                     mat_add(A, mat_scale(A, q - A.one(), g), mat_scale(A, q, id)),
                 "generator matrices satisfy the quadratic relation");
      }
      for (int i = 1; i + 1 < n; ++i)
        cx.check(mat_mul(A, mat_mul(A, m.gen_matrix(i), m.gen_matrix(i + 1)), m.gen_matrix(i)) ==
                     mat_mul(A, mat_mul(A, m.gen_matrix(i + 1), m.gen_matrix(i)),
                             m.gen_matrix(i + 1)),
                 "generator matrices satisfy the braid relation");
      for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
          cx.check(mat_mul(A, m.gen_matrix(i), m.gen_matrix(j)) ==
                       mat_mul(A, m.gen_matrix(j), m.gen_matrix(i)),
                   "distant generator matrices commute");

      auto h = cx.random_elt(n, A, 3);
      auto mat = m.action_of(h);
      bool same = true;
      for (size_t k = 0; k < m.dim(); ++k) {
        auto c = m.coords_of(hecke_mul(m.basis_elt(k), h));
        for (size_t j = 0; j < m.dim(); ++j) same = same && c[j] == mat(k, j);
      }
      cx.check(same, "the matrix action reproduces multiplication in the algebra");
    }

  // a composition and its sorted partition give isomorphic modules
  for (int n = 2; n <= cx.cap(5); ++n)
    for (const Composition& shape : compositions_of(n)) {
      Partition sorted = sorted_to_partition(shape);
      if (sorted == shape) continue;
      if (n <= cx.cap(4)) {
        PermModule<RationalFunctionField> a(n, F, shape);
        PermModule<RationalFunctionField> b(n, F, sorted);
        cx.check(a.dim() == b.dim(), "dimensions agree with the sorted shape");
        cx.check(row_spans_equal(F, rows_of(F, n, annihilator_kernel(a)),
                                 rows_of(F, n, annihilator_kernel(b))),
                 "annihilators agree with the sorted shape");
      }
      bool same = true;
      for (const Rat& vv : {Rat(1), Rat(2)}) {
        RationalAtQ Q{vv};
        PermModule<RationalAtQ> an(n, Q, shape);
        PermModule<RationalAtQ> bn(n, Q, sorted);
        for (int i = 1; i < n; ++i)
          same = same &&
                 charpoly_rational(an.gen_matrix(i)) == charpoly_rational(bn.gen_matrix(i));
      }
      cx.check(same, "generator characteristic polynomials agree at v = 1 and v = 2");
    }

  // sharp intertwines the module with its signed companion
  for (int n = 2; n <= cx.cap(4); ++n)
    for (const Partition& la : partitions_of(n)) {
      PermModule<RationalFunctionField> plain(n, F, la);
      PermModule<RationalFunctionField> tilde(n, F, la, MurphyKind::tilde);
      size_t d = plain.dim();
      Matrix<RationalFunction> s(d, d, F.zero());
      bool members = true;
      for (size_t k = 0; k < d && members; ++k) {
        auto img = sharp(plain.basis_elt(k));
        try {
          auto c = tilde.coords_of(img);
          for (size_t j = 0; j < d; ++j) s(k, j) = c[j];
        } catch (const std::invalid_argument&) {
          members = false;
        }
      }
      cx.check(members, "sharp maps the module into its signed companion");
      if (!members) continue;
      cx.check(mat_rank(F, s) == static_cast<long>(d), "the comparison map is bijective");
      bool inter = true;
      for (int i = 1; i < n; ++i) {
        auto lhs = mat_mul(
            F, plain.action_of(sharp(t_basis(n, F, Permutation::transposition(n, i)))), s);
        inter = inter && lhs == mat_mul(F, s, tilde.gen_matrix(i));
      }
      cx.check(inter, "sharp twists the action onto the signed module");
    }
  return cx.res;
}

SuiteResult suite_ideals(const VerifyOptions& opt) {
  Ctx cx("ideals", opt);
  LaurentRing A;
  RationalFunctionField F;

  // the closed-form annihilator span absorbs both one-sided actions
  for (int n = 2; n <= cx.cap(4); ++n) {
    auto pos = perm_positions(n);
    for (const Partition& la : partitions_of(n)) {
      auto closed = annihilator_closed(n, A, la);
      if (closed.elements.empty()) continue;
      std::vector<HeckeElt<RationalFunctionField>> elts;
      elts.reserve(closed.elements.size());
      for (const auto& e : closed.elements) elts.push_back(embed_rf(e));
      auto rows = rows_of(F, n, elts);
      for (const auto& g : elts)
        for (int i = 1; i < n; ++i) {
          cx.check(in_row_span(F, rows, elt_coords(mul_gen(g, i), pos)),
                   "closed span absorbs right multiplication by a generator");
          cx.check(in_row_span(F, rows,
                               elt_coords(lmul_t(Permutation::transposition(n, i), g), pos)),
                   "closed span absorbs left multiplication by a generator");
        }
    }
  }

  // upward-closed shape sets give two-sided ideals, and the full set spans
  for (int n = 2; n <= cx.cap(3); ++n) {
    auto pos = perm_positions(n);
    for (const Partition& la : partitions_of(n)) {
      auto ideal = cell_ideal_basis<RationalFunctionField>(
          n, F, [&](const Partition& mu) { return dominates(mu, la); }, false, "upper");
      if (ideal.elements.empty()) continue;
      auto rows = rows_of(F, n, ideal.elements);
      for (const auto& g : ideal.elements)
        for (int i = 1; i < n; ++i) {
          cx.check(in_row_span(F, rows, elt_coords(mul_gen(g, i), pos)),
                   "upper-set span absorbs right multiplication");
          cx.check(in_row_span(F, rows,
                               elt_coords(lmul_t(Permutation::transposition(n, i), g), pos)),
                   "upper-set span absorbs left multiplication");
        }
    }
    auto full = cell_ideal_basis<RationalFunctionField>(
        n, F, [](const Partition&) { return true; }, false, "all");
    cx.check(row_space_rank(F, rows_of(F, n, full.elements)) == factorial(n),
             "the full shape set spans the whole algebra");
  }

  bool rejected = false;
  try {
    cell_ideal_basis<LaurentRing>(
        4, A, [](const Partition& mu) { return mu == Partition::parse("2,2"); }, false, "bad");
  } catch (const std::invalid_argument&) {
    rejected = true;
  }
  cx.check(rejected, "a shape set that is not upward closed is rejected");
  return cx.res;
}

SuiteResult suite_annihilator(const VerifyOptions& opt) {
  Ctx cx("annihilator", opt);
  LaurentRing A;
  RationalFunctionField F;

  for (int n = 2; n <= cx.cap(4); ++n)
    for (const Partition& la : partitions_of(n)) {
      auto rep = verify_annihilator_integral(la, default_specializations());
      cx.check(rep.containment_integral,
               "closed generators annihilate the module over the Laurent ring");
      cx.check(rep.generic.equality, "the generic annihilator equals the closed span");
      long expected = 0;
      for (const Partition& mu : partitions_of(n))
        if (!dominates(mu, la))
          expected += static_cast<long>(standard_tableau_count(mu) *
                                        standard_tableau_count(mu));
      cx.check(rep.generic.kernel_rank == expected,
               "generic kernel rank counts the non-dominating tableau pairs");
      for (const auto& chk : rep.specializations) {
        cx.check(chk.report.containment,
                 "closed generators annihilate at every specialization");
        if (chk.verdict.semisimple)
          cx.check(chk.report.equality, "equality holds at semisimple specializations");
        if (!chk.report.equality)
          cx.check(!chk.verdict.semisimple,
                   "a strict gap only appears at non-semisimple specializations");
      }
      cx.check(rep.certified, "the integral certificate is granted");

      PermModule<RationalFunctionField> m(n, F, la);
      std::vector<HeckeElt<RationalFunctionField>> closed;
      for (const auto& e : annihilator_closed(n, A, la).elements) closed.push_back(embed_rf(e));
      cx.check(row_spans_equal(F, rows_of(F, n, annihilator_kernel(m)), rows_of(F, n, closed)),
               "the kernel span equals the closed span over the generic field");
    }

  // dominance monotonicity of the annihilators
  for (int n = 2; n <= cx.cap(4); ++n) {
    auto shapes = partitions_of(n);
    std::vector<std::vector<std::vector<RationalFunction>>> kernels;
    for (const Partition& la : shapes) {
      PermModule<RationalFunctionField> m(n, F, la);
      kernels.push_back(rows_of(F, n, annihilator_kernel(m)));
    }
    for (size_t i = 0; i < shapes.size(); ++i)
      for (size_t j = 0; j < shapes.size(); ++j) {
        if (i == j || !dominates(shapes[i], shapes[j])) continue;
        bool contained = true;
        for (const auto& vec : kernels[j]) contained = contained && in_row_span(F, kernels[i], vec);
        cx.check(contained, "a dominating shape has the larger annihilator");
      }
  }

  // the sharp twist of the closed basis annihilates the signed module
  for (int n = 2; n <= cx.cap(4); ++n)
    for (const Partition& la : partitions_of(n)) {
      auto tw = twisted_annihilator(n, F, la);
      PermModule<RationalFunctionField> tilde(n, F, la, MurphyKind::tilde);
      bool kills = true;
      for (const auto& g : tw.elements) kills = kills && annihilates_module(tilde, g);
      cx.check(kills, "twisted generators annihilate the signed module");
      auto twa = twisted_annihilator(n, A, la);
      auto closed = annihilator_closed(n, A, la);
      bool match = twa.elements.size() == closed.elements.size();
      for (size_t i = 0; match && i < twa.elements.size(); ++i)
        match = sharp(twa.elements[i]) == closed.elements[i];
      cx.check(match, "sharp carries the twisted basis onto the closed basis");
    }

  // integral containment extends one rank past the full certification
  if (cx.max_n >= 5) {
    const int n = 5;
    for (const Partition& la : partitions_of(n)) {
      PermModule<LaurentRing> m(n, A, la);
      bool kills = true;
      for (const auto& g : annihilator_closed(n, A, la).elements)
        kills = kills && annihilates_module(m, g);
      cx.check(kills, "closed generators annihilate the module over the Laurent ring");
    }
  }
  return cx.res;
}

SuiteResult suite_equalities(const VerifyOptions& opt) {
  Ctx cx("equalities", opt);
  RingSpec qv = RingSpec::rational_function();
  for (int n = 2; n <= cx.cap(4); ++n)
    for (const Partition& la : partitions_of(n)) {
      auto triple = annihilator_equalities(qv, la);
      cx.check(triple.ideal_eq_module && triple.ideal_rank == triple.module_rank,
               "the cell ideal and the permutation module share one annihilator");
      bool top = la == partitions_of(n).front();
      cx.check(triple.quotient_eq_module == top,
               "the quotient annihilator matches the module annihilator exactly at the "
               "one-row shape");
      if (!top)
        cx.check(triple.quotient_rank > triple.module_rank,
                 "off the one-row shape the quotient annihilator is strictly larger");
      cx.note("lambda=" + la.str() + ": ideal=" + std::to_string(triple.ideal_rank) +
              " quotient=" + std::to_string(triple.quotient_rank) +
              " module=" + std::to_string(triple.module_rank));
    }
  return cx.res;
}

SuiteResult suite_collapse(const VerifyOptions& opt) {
  Ctx cx("collapse", opt);
  LaurentRing A;
  std::uniform_int_distribution<int> cdist(-3, 3);
  for (int n = 2; n <= cx.cap(4); ++n)
    for (const Partition& la : partitions_of(n)) {
      Partition lat = la.transpose();
      for (int trial = 0; trial < 3; ++trial) {
        // random combination of sharped cellular elements with shapes below
        // the transposed target
        struct Pick {
          Partition shape;
          Tableau u, w;
          LaurentPoly coeff;
        };
        std::vector<Pick> support;
        for (const Partition& mu : partitions_of(n)) {
          if (!dominates(lat, mu)) continue;
          for (const Tableau& u : standard_tableaux(mu))
            for (const Tableau& w : standard_tableaux(mu)) {
              int c = cdist(cx.rng);
              if (c == 0) continue;
              support.push_back({mu, u, w, LaurentPoly(c)});
            }
        }
        if (support.empty()) continue;
        HeckeElt<LaurentRing> h(n, A);
        for (const auto& p : support)
          h += sharp(murphy_elt(n, A, p.shape, p.u, p.w)).scaled(p.coeff);

        // a support pair minimal under componentwise tableau dominance
        size_t min_at = support.size();
        for (size_t i = 0; i < support.size() && min_at == support.size(); ++i) {
          bool minimal = true;
          for (size_t j = 0; j < support.size(); ++j) {
            if (i == j) continue;
            if (tableau_dominates(support[i].u, support[j].u) &&
                tableau_dominates(support[i].w, support[j].w)) {
              minimal = false;
              break;
            }
          }
          if (minimal) min_at = i;
        }
        cx.check(min_at < support.size(), "a minimal support pair exists");
        if (min_at >= support.size()) continue;
        const Pick& p0 = support[min_at];

        // pairing against the transposed pair collapses to one unit multiple
        auto probe =
            murphy_elt(n, A, p0.shape.transpose(), p0.u.transposed(), p0.w.transposed());
        auto val = bilinear_form_fast(probe, h);
        auto diag = bilinear_form_fast(probe, sharp(murphy_elt(n, A, p0.shape, p0.u, p0.w)));
        cx.check(diag.is_unit(), "the matched diagonal value is a unit");
        cx.check(val == diag * p0.coeff && !val.is_zero(),
                 "the probe isolates the minimal coefficient, which cannot vanish");
      }
    }
  return cx.res;
}

SuiteResult suite_semisimple(const VerifyOptions& opt) {
  Ctx cx("semisimple", opt);
  cx.check(hecke_semisimple_rational_q(Rat(4), 4).semisimple,
           "q = 4 over the rationals is semisimple");
  cx.check(!hecke_semisimple_rational_q(Rat(-1), 2).semisimple,
           "q = -1 fails already for two letters");
  cx.check(hecke_semisimple_rational_q(Rat(-1), 1).semisimple, "q = -1 is harmless in rank one");
  cx.check(!hecke_semisimple_gfp_q(2, 1, 4).semisimple,
           "characteristic 2 at q = 1 fails for four letters");
  cx.check(hecke_semisimple_gfp_q(5, 1, 4).semisimple,
           "characteristic 5 at q = 1 is safe for four letters");
  cx.check(is_semisimple(RingSpec::rationals_at(Rat(2)), 4).semisimple,
           "v = 2 over the rationals");
  cx.check(!is_semisimple(RingSpec::prime_field(2, 1), 4).semisimple, "GF(2) at v = 1");
  cx.check(is_semisimple(RingSpec::prime_field(5, 1), 4).semisimple, "GF(5) at v = 1");
  cx.check(is_semisimple(RingSpec::rational_function(), 6).semisimple,
           "the generic field is semisimple");
  bool threw = false;
  try {
    is_semisimple(RingSpec::laurent(), 3);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  cx.check(threw, "the verdict is refused over the Laurent ring");

  // at a semisimple specialization every annihilator keeps its generic rank
  for (int n = 2; n <= cx.cap(4); ++n)
    for (const Partition& la : partitions_of(n))
      for (const RingSpec& spec : {RingSpec::rationals_at(Rat(2)), RingSpec::prime_field(5, 1)}) {
        auto rep = verify_annihilator(spec, la);
        cx.check(rep.equality && rep.kernel_rank == annihilator_closed_rank(n, la),
                 "annihilator rank at " + spec.str() + " matches the generic rank");
      }
  return cx.res;
}

SuiteResult suite_tensor(const VerifyOptions& opt) {
  Ctx cx("tensor", opt);
  const RationalFunctionField F;
  const int mcap = std::max(2, cx.cap(3));
  const int scap = std::max(1, cx.cap(3));

  std::vector<std::vector<long>> sample_h = {{1, 0, 0, 0}, {0, -1, 2, 0}, {1, 1, -1, 3}};
  for (int m = 2; m <= mcap; ++m)
    for (int n = 1; n <= scap; ++n) {
      size_t dim = 1;
      for (int k = 0; k < n; ++k) dim *= static_cast<size_t>(m);
      auto id = Matrix<RationalFunction>::identity(dim, F.one(), F.zero());
      auto zero = Matrix<RationalFunction>(dim, dim, F.zero());

      cx.check(full_matrix(m, n, F, u_cartan(m, n, F, std::vector<long>(m, 0))) == id,
               "the trivial torus weight acts as the identity");
      bool additive = true;
      for (const auto& ha : sample_h)
        for (const auto& hb : sample_h) {
          std::vector<long> ta(ha.begin(), ha.begin() + m), tb(hb.begin(), hb.begin() + m),
              ts(m);
          for (int k = 0; k < m; ++k)
            ts[static_cast<size_t>(k)] = ta[static_cast<size_t>(k)] + tb[static_cast<size_t>(k)];
          additive = additive &&
                     full_matrix(m, n, F,
                                 u_product(F, u_cartan(m, n, F, ta), u_cartan(m, n, F, tb))) ==
                         full_matrix(m, n, F, u_cartan(m, n, F, ts));
        }
      cx.check(additive, "torus weights compose additively");

      for (int i = 1; i < m; ++i) {
        auto E = u_generator_e(m, n, F, i);
        auto Fi = u_generator_f(m, n, F, i);

        bool conj = true;
        for (const auto& h : sample_h) {
          std::vector<long> t(h.begin(), h.begin() + m), tneg = t;
          for (auto& x : tneg) x = -x;
          auto vh = u_cartan(m, n, F, t), vhi = u_cartan(m, n, F, tneg);
          long alpha = t[static_cast<size_t>(i - 1)] - t[static_cast<size_t>(i)];
          conj = conj &&
                 full_matrix(m, n, F, u_product(F, u_product(F, vh, E), vhi)) ==
                     mat_scale(F, F.v_power(alpha), full_matrix(m, n, F, E)) &&
                 full_matrix(m, n, F, u_product(F, u_product(F, vh, Fi), vhi)) ==
                     mat_scale(F, F.v_power(-alpha), full_matrix(m, n, F, Fi));
        }
        cx.check(conj, "torus conjugation rescales the generators by the root pairing");

        for (int j = 1; j < m; ++j) {
          auto Fj = u_generator_f(m, n, F, j);
          auto lhs = u_sub(F, u_product(F, E, Fj), u_product(F, Fj, E));
          if (i == j)
            cx.check(full_matrix(m, n, F, lhs) ==
                         full_matrix(m, n, F, u_cartan_quotient(m, n, F, i, i + 1)),
                     "the raising-lowering commutator gives the divided torus difference");
          else
            cx.check(full_matrix(m, n, F, lhs) == zero,
                     "raising and lowering at different nodes commute");
        }

        for (int j = 1; j < m; ++j) {
          if (std::abs(i - j) != 1) continue;
          auto Ej = u_generator_e(m, n, F, j);
          auto serre_e =
              u_add(F,
                    u_sub(F, u_product(F, u_product(F, E, E), Ej),
                          u_scale(F, F.v_power(1) + F.v_power(-1),
                                  u_product(F, u_product(F, E, Ej), E))),
                    u_product(F, Ej, u_product(F, E, E)));
          cx.check(full_matrix(m, n, F, serre_e) == zero, "the raising Serre relation holds");
          auto Gj = u_generator_f(m, n, F, j);
          auto serre_f =
              u_add(F,
                    u_sub(F, u_product(F, u_product(F, Fi, Fi), Gj),
                          u_scale(F, F.v_power(1) + F.v_power(-1),
                                  u_product(F, u_product(F, Fi, Gj), Fi))),
                    u_product(F, Gj, u_product(F, Fi, Fi)));
          cx.check(full_matrix(m, n, F, serre_f) == zero, "the lowering Serre relation holds");
        }
      }
    }

  if (cx.max_n >= 4) {
    int m = 4, n = 2;
    auto E1 = u_generator_e(m, n, F, 1), E3 = u_generator_e(m, n, F, 3);
    auto F1 = u_generator_f(m, n, F, 1), F3 = u_generator_f(m, n, F, 3);
    cx.check(full_matrix(m, n, F, u_product(F, E1, E3)) ==
                 full_matrix(m, n, F, u_product(F, E3, E1)),
             "distant raising generators commute");
    cx.check(full_matrix(m, n, F, u_product(F, F1, F3)) ==
                 full_matrix(m, n, F, u_product(F, F3, F1)),
             "distant lowering generators commute");
  }

  // sl2 triples through every root
  for (int m = 2; m <= cx.cap(4); ++m)
    for (int n = 1; n <= scap; ++n)
      for (int i = 1; i < m; ++i)
        for (int j = i + 1; j <= m; ++j) {
          auto E = root_vector(m, n, F, i, j);
          auto Fv = root_vector(m, n, F, j, i);
          auto K = u_k_root(m, n, F, i, j, 1);
          auto Ki = u_k_root(m, n, F, i, j, -1);
          cx.check(full_matrix(m, n, F, u_product(F, u_product(F, K, E), Ki)) ==
                       mat_scale(F, F.v_power(2), full_matrix(m, n, F, E)),
                   "the root torus rescales the raising root vector by v^2");
          cx.check(full_matrix(m, n, F, u_product(F, u_product(F, K, Fv), Ki)) ==
                       mat_scale(F, F.v_power(-2), full_matrix(m, n, F, Fv)),
                   "the root torus rescales the lowering root vector by v^-2");
          auto comm = u_sub(F, u_product(F, E, Fv), u_product(F, Fv, E));
          cx.check(full_matrix(m, n, F, comm) ==
                       full_matrix(m, n, F, u_cartan_quotient(m, n, F, i, j)),
                   "each root pair closes into a quantum sl2");
        }

  // the commutator identity behind the lowering injection
  for (int n = 1; n <= scap; ++n)
    for (int r = 1; r <= 3; ++r) {
      const int m = 2;
      auto E = root_vector(m, n, F, 1, 2);
      auto Fv = root_vector(m, n, F, 2, 1);
      auto Q = u_cartan_quotient(m, n, F, 1, 2);
      auto Er = u_power(F, E, r);
      auto lhs = u_sub(F, u_product(F, Er, Fv), u_product(F, Fv, Er));
      size_t dim = static_cast<size_t>(1) << n;
      Matrix<RationalFunction> rhs(dim, dim, F.zero());
      for (int s = 0; s <= r - 1; ++s) {
        int sp = r - 1 - s;
        UOperator<RationalFunctionField> term = Q;
        if (s > 0) term = u_product(F, u_power(F, E, s), term);
        if (sp > 0) term = u_product(F, term, u_power(F, E, sp));
        rhs = mat_add(F, rhs, full_matrix(m, n, F, term));
      }
      cx.check(full_matrix(m, n, F, lhs) == rhs,
               "iterated raising commutes past lowering through torus corrections");
    }

  // the symmetric-group side: defining relations of the T-action
  for (int m = 2; m <= mcap; ++m)
    for (int n = 2; n <= scap; ++n) {
      size_t dim = 1;
      for (int k = 0; k < n; ++k) dim *= static_cast<size_t>(m);
      auto id = Matrix<RationalFunction>::identity(dim, F.one(), F.zero());
      for (int k = 1; k < n; ++k) {
        auto t = hecke_full_matrix(m, n, F, k);
        auto quad = mat_sub(F, mat_mul(F, t, t),
                            mat_add(F, mat_scale(F, F.v_power(2) - F.one(), t),
                                    mat_scale(F, F.v_power(2), id)));
        cx.check(quad == Matrix<RationalFunction>(dim, dim, F.zero()),
                 "the T-action satisfies the quadratic relation");
      }
      for (int k = 1; k + 1 < n; ++k) {
        auto a = hecke_full_matrix(m, n, F, k);
        auto b = hecke_full_matrix(m, n, F, k + 1);
        cx.check(mat_mul(F, mat_mul(F, a, b), a) == mat_mul(F, mat_mul(F, b, a), b),
                 "the T-action satisfies the braid relation");
      }
    }
  if (cx.max_n >= 4) {
    int m = 2, n = 4;
    auto a = hecke_full_matrix(m, n, F, 1);
    auto b = hecke_full_matrix(m, n, F, 3);
    cx.check(mat_mul(F, a, b) == mat_mul(F, b, a), "distant T-generators commute");
  }

  // the two actions centralize each other
  std::vector<std::pair<int, int>> pairs = {{2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}};
  for (auto [m, n] : pairs) {
    if (m > cx.cap(3) || n > cx.cap(4)) continue;
    cx.check(verify_commuting_actions(m, n, F),
             "the quantum-group and T actions commute on " + std::to_string(m) + "^" +
                 std::to_string(n) + " tensor space");
  }
  return cx.res;
}

SuiteResult suite_phi(const VerifyOptions& opt) {
  Ctx cx("phi", opt);
  const RationalFunctionField F;
  {
    Tableau t = index_tableau({2, 1, 2, 3}, 3);
    cx.check(t.shape() == Composition::parse("1,2,1") &&
                 t.rows() == std::vector<std::vector<int>>{{2}, {1, 3}, {4}},
             "tensor positions sort into rows by letter value");
  }
  for (int n = 2; n <= cx.cap(4); ++n)
    for (const Composition& la : compositions_of(n)) {
      int m = n;
      auto phi = phi_matrix(F, la, m);
      PermModule<RationalFunctionField> mod(n, F, la);
      bool square = phi.rows() == mod.dim() && phi.cols() == mod.dim();
      cx.check(square, "the weight space and the module have equal dimension");
      if (!square) continue;
      cx.check(mat_rank(F, phi) == static_cast<long>(phi.rows()),
               "the weight-space comparison map is bijective");
      bool equiv = true;
      for (int k = 1; k < n; ++k) {
        auto tk = hecke_weight_matrix(m, n, F, k, padded(la, m));
        equiv = equiv && mat_mul(F, tk.matrix, phi) == mat_mul(F, phi, mod.gen_matrix(k));
      }
      cx.check(equiv, "the comparison map intertwines the two T-actions");
    }
  return cx.res;
}

SuiteResult suite_embedding(const VerifyOptions& opt) {
  Ctx cx("embedding", opt);
  const RationalFunctionField F;

  if (cx.max_n >= 4) {
    RationalAtQ Q1{Rat(1)};
    auto f12 = embedding_map(2, 4, Q1, {3, 1}, 1, 2);
    const int expected[4][6] = {{1, 1, 0, 1, 0, 0},
                                {1, 0, 1, 0, 1, 0},
                                {0, 1, 1, 0, 0, 1},
                                {0, 0, 0, 1, 1, 1}};
    bool match = f12.matrix.rows() == 4 && f12.matrix.cols() == 6;
    if (match)
      for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 6; ++c) match = match && f12.matrix(r, c) == Rat(expected[r][c]);
    cx.check(match, "the lowering between the (3,1) and (2,2) weight spaces at v = 1");
    cx.check(mat_rank(Q1, f12.matrix) == 4, "that lowering has full rank over the rationals");
    PrimeFieldAtQ g2(2, 1);
    cx.check(mat_rank(g2, embedding_map(2, 4, g2, {3, 1}, 1, 2).matrix) == 3,
             "its rank drops to 3 in characteristic 2");
  }

  for (int n = 2; n <= cx.cap(4); ++n)
    for (const Composition& mu : compositions_of(n)) {
      int m = n;
      auto w = padded(mu, m);
      for (int i = 1; i < m; ++i)
        for (int j = i + 1; j <= m; ++j) {
          if (w[static_cast<size_t>(i - 1)] <= w[static_cast<size_t>(j - 1)]) continue;
          auto emb = embedding_map(m, n, F, w, i, j);
          cx.check(mat_rank(F, emb.matrix) == static_cast<long>(emb.matrix.rows()),
                   "single-box lowerings are injective over the generic field");
        }
    }

  // conjugating through the weight-space identifications gives module maps
  struct Case {
    Composition la;
    int i, j;
  };
  std::vector<Case> cases = {{Composition::parse("2,1"), 1, 2},
                             {Composition::parse("3,1"), 1, 2},
                             {Composition::parse("2,2"), 2, 3},
                             {Composition::parse("2,1,1"), 1, 3}};
  for (const auto& cs : cases) {
    int n = cs.la.n();
    if (n > cx.max_n) continue;
    int m = std::max(n, cs.j);
    auto emb = embedding_map(m, n, F, padded(cs.la, m), cs.i, cs.j);
    Composition target(
        std::vector<int>(emb.codomain_weight.begin(), emb.codomain_weight.end()));
    auto cmp = mat_mul(F, monomial_inverse(F, phi_matrix(F, cs.la, m)),
                       mat_mul(F, emb.matrix, phi_matrix(F, target, m)));
    PermModule<RationalFunctionField> dom(n, F, cs.la), cod(n, F, target);
    bool sized = cmp.rows() == dom.dim() && cmp.cols() == cod.dim();
    cx.check(sized, "the conjugated lowering connects the two modules");
    if (!sized) continue;
    cx.check(mat_rank(F, cmp) == static_cast<long>(cmp.rows()),
             "the conjugated lowering is injective");
    bool inter = true;
    for (int k = 1; k < n; ++k)
      inter = inter &&
              mat_mul(F, dom.gen_matrix(k), cmp) == mat_mul(F, cmp, cod.gen_matrix(k));
    cx.check(inter, "the conjugated lowering commutes with every generator");
  }

  // composites along a chain of single-box moves stay injective
  for (int n = 3; n <= cx.cap(4); ++n) {
    int m = n;
    auto parts = partitions_of(n);
    for (const Partition& la : parts)
      for (const Partition& mu : parts) {
        if (!(dominates(la, mu) && !(la == mu))) continue;

        std::map<Partition, std::pair<Partition, std::pair<int, int>>> from;
        std::vector<Partition> queue{la};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
          Partition cur = queue[qi];
          if (cur == mu) break;
          auto w = padded(cur, m);
          for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
              if (w[static_cast<size_t>(i - 1)] <= w[static_cast<size_t>(j - 1)]) continue;
              auto nw = w;
              --nw[static_cast<size_t>(i - 1)];
              ++nw[static_cast<size_t>(j - 1)];
              Composition nc(nw);
              if (!nc.is_partition()) continue;
              Partition np(nc);
              if (from.count(np) || np == la) continue;
              from[np] = {cur, {i, j}};
              queue.push_back(np);
            }
        }
        cx.check(from.count(mu) > 0, "dominance is realized by single-box moves");
        if (!from.count(mu)) continue;

        std::vector<std::pair<Partition, std::pair<int, int>>> steps;
        Partition at = mu;
        while (!(at == la)) {
          auto [prev, move] = from.at(at);
          steps.push_back({prev, move});
          at = prev;
        }
        std::reverse(steps.begin(), steps.end());

        Matrix<RationalFunction> comp;
        bool first = true;
        for (const auto& [src, move] : steps) {
          auto emb = embedding_map(m, n, F, padded(src, m), move.first, move.second);
          comp = first ? emb.matrix : mat_mul(F, comp, emb.matrix);
          first = false;
        }
        cx.check(mat_rank(F, comp) == static_cast<long>(comp.rows()) &&
                     comp.rows() == weight_space(padded(la, m), m, n).size() &&
                     comp.cols() == weight_space(padded(mu, m), m, n).size(),
                 "the composite lowering along the chain stays injective");
      }
  }
  return cx.res;
}

using SuiteFn = SuiteResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"involutions", suite_involutions},
      {"murphy", suite_murphy},
      {"bilinear", suite_bilinear},
      {"pairing", suite_pairing},
      {"permmodule", suite_permmodule},
      {"ideals", suite_ideals},
      {"annihilator", suite_annihilator},
      {"equalities", suite_equalities},
      {"collapse", suite_collapse},
      {"semisimple", suite_semisimple},
      {"tensor", suite_tensor},
      {"phi", suite_phi},
      {"embedding", suite_embedding},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  names.reserve(registry().size());
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
  for (const auto& [nm, fn] : registry()) {
    if (nm != name) continue;
    try {
      return fn(opt);
    } catch (const std::exception& e) {
      SuiteResult res;
      res.name = name;
      res.checks = 1;
      res.failures = 1;
      res.notes.push_back(std::string("exception: ") + e.what());
      return res;
    }
  }
  throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const VerifyOptions& opt) {
  std::vector<SuiteResult> out;
  out.reserve(names.size());
  for (const std::string& name : names) out.push_back(run_suite(name, opt));
  return out;
}

}  // namespace heckealg
