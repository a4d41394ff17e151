#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heckealg/hecke.hpp"

using namespace heckealg;

namespace {

std::mt19937_64 rng(112358u);

Permutation random_perm(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_one_line(std::move(img));
}

// sparse random element with small Laurent coefficients
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

// generator indices i with i, i+1 in the same block of the composition
std::vector<int> inner_generators(const Composition& shape) {
  std::vector<int> block;
  int b = 0;
  for (size_t k = 0; k < shape.parts().size(); ++k) {
    for (long j = 0; j < shape.parts()[k]; ++j) block.push_back(b);
    ++b;
  }
  std::vector<int> out;
  for (size_t i = 0; i + 1 < block.size(); ++i)
    if (block[i] == block[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

long longest_length(const Composition& shape) {
  long acc = 0;
  for (long p : shape.parts()) acc += p * (p - 1) / 2;
  return acc;
}

}  // namespace

TEST_CASE("hecke: quadratic and braid relations for the generators") {
  LaurentRing A;
  PrimeFieldAtQ g7(7, 3);
  const int n = 4;

  auto check_relations = [&](auto ring) {
    using R = decltype(ring);
    auto q = ring.v_power(2);
    for (int i = 1; i < n; ++i) {
      HeckeElt<R> ti = t_basis(n, ring, Permutation::transposition(n, i));
      HeckeElt<R> sq = mul_gen(ti, i);
      HeckeElt<R> expect = ti.scaled(q - ring.one()) + hecke_one(n, ring).scaled(q);
      CHECK(sq == expect);
    }
    for (int i = 1; i + 1 < n; ++i) {
      HeckeElt<R> e = hecke_one(n, ring);
      CHECK(mul_word(e, {i, i + 1, i}) == mul_word(e, {i + 1, i, i + 1}));
    }
    HeckeElt<R> e = hecke_one(n, ring);
    CHECK(mul_word(e, {1, 3}) == mul_word(e, {3, 1}));
  };
  check_relations(A);
  check_relations(g7);
}

TEST_CASE("hecke: products of T-basis elements") {
  LaurentRing A;
  const int n = 4;

  // T_u T_w = T_{uw} whenever lengths add
  int checked = 0;
  for (const Permutation& u : all_permutations(n))
    for (const Permutation& w : all_permutations(n)) {
      if (u.length() + w.length() != (u * w).length()) continue;
      auto prod = hecke_mul(t_basis(n, A, u), t_basis(n, A, w));
      CHECK(prod == t_basis(n, A, u * w));
      ++checked;
    }
  CHECK(checked > 24);

  // hecke_mul against step-by-step words on random elements
  for (int it = 0; it < 20; ++it) {
    HeckeElt<LaurentRing> a = random_elt(n, A, 5);
    Permutation w = random_perm(n);
    CHECK(hecke_mul(a, t_basis(n, A, w)) == mul_word(a, w.reduced_word()));
  }

  // associativity
  for (int it = 0; it < 10; ++it) {
    auto a = random_elt(n, A, 4), b = random_elt(n, A, 4), c = random_elt(n, A, 4);
    CHECK(hecke_mul(hecke_mul(a, b), c) == hecke_mul(a, hecke_mul(b, c)));
  }
}

TEST_CASE("hecke: T_w inverses") {
  LaurentRing A;
  const int n = 4;
  for (const Permutation& w : all_permutations(n)) {
    auto inv = t_inverse(n, A, w);
    CHECK(hecke_mul(t_basis(n, A, w), inv) == hecke_one(n, A));
    CHECK(hecke_mul(inv, t_basis(n, A, w)) == hecke_one(n, A));
  }
}

TEST_CASE("hecke: the * anti-automorphism") {
  LaurentRing A;
  const int n = 4;
  for (int it = 0; it < 10; ++it) {
    auto a = random_elt(n, A, 5), b = random_elt(n, A, 5);
    CHECK(star(star(a)) == a);
    CHECK(star(hecke_mul(a, b)) == hecke_mul(star(b), star(a)));
  }
  Permutation w = Permutation::from_one_line({3, 1, 4, 2});
  CHECK(star(t_basis(n, A, w)) == t_basis(n, A, w.inverse()));
}

TEST_CASE("hecke: the dagger anti-automorphism") {
  LaurentRing A;
  const int n = 4;
  auto q = A.v_power(2);

  // on a generator: (-q)(T_i)^{-1} = (q-1) - T_i
  HeckeElt<LaurentRing> t1 = t_basis(n, A, Permutation::transposition(n, 1));
  HeckeElt<LaurentRing> expect = hecke_one(n, A).scaled(q - A.one()) - t1;
  CHECK(dagger(t1) == expect);

  for (int it = 0; it < 8; ++it) {
    auto a = random_elt(n, A, 4), b = random_elt(n, A, 4);
    CHECK(dagger(dagger(a)) == a);
    CHECK(dagger(hecke_mul(a, b)) == hecke_mul(dagger(b), dagger(a)));
  }
}

TEST_CASE("hecke: the sharp automorphism") {
  LaurentRing A;
  const int n = 4;
  for (int it = 0; it < 8; ++it) {
    auto a = random_elt(n, A, 4), b = random_elt(n, A, 4);
    CHECK(sharp(sharp(a)) == a);
    CHECK(sharp(hecke_mul(a, b)) == hecke_mul(sharp(a), sharp(b)));
    CHECK(sharp(a) == star(dagger(a)));
    CHECK(sharp(a) == dagger(star(a)));
  }

  // at q = 1 sharp is w -> (-1)^{l(w)} w
  RationalAtQ q1{Rat(1)};
  for (const Permutation& w : all_permutations(n)) {
    auto img = sharp(t_basis(n, q1, w));
    auto expect = t_basis(n, q1, w).scaled(w.length() % 2 ? Rat(-1) : Rat(1));
    CHECK(img == expect);
  }
}

TEST_CASE("hecke: x and y elements of Young subgroups") {
  LaurentRing A;
  Permutation s1 = Permutation::transposition(3, 1);

  auto x21 = x_elem(3, A, Composition::parse("2,1"));
  CHECK(x21.term_count() == 2);
  CHECK(x21.coeff(Permutation(3)) == LaurentPoly(1));
  CHECK(x21.coeff(s1) == LaurentPoly(1));

  auto y21 = y_elem(3, A, Composition::parse("2,1"));
  CHECK(y21.coeff(Permutation(3)) == LaurentPoly(1));
  CHECK(y21.coeff(s1) == LaurentPoly::term(Int(-1), -2));

  auto x3 = x_elem(3, A, Composition::parse("3"));
  CHECK(x3.term_count() == 6);
  auto y3 = y_elem(3, A, Composition::parse("3"));
  for (const Permutation& w : all_permutations(3)) {
    LaurentPoly c = LaurentPoly::term(Int(w.length() % 2 ? -1 : 1), -2 * w.length());
    CHECK(y3.coeff(w) == c);
  }

  // eigenvector property under the parabolic generators
  for (int n = 2; n <= 5; ++n) {
    auto q = A.v_power(2);
    for (const Composition& shape : compositions_of(n)) {
      auto x = x_elem(n, A, shape);
      auto y = y_elem(n, A, shape);
      for (int i : inner_generators(shape)) {
        CHECK(mul_gen(x, i) == x.scaled(q));
        CHECK(mul_gen(y, i) == y.scaled(LaurentPoly(-1)));
      }
    }
  }
}

TEST_CASE("hecke: sharp swaps x and y up to a power of q") {
  LaurentRing A;
  for (int n = 2; n <= 4; ++n)
    for (const Composition& shape : compositions_of(n)) {
      auto lhs = sharp(x_elem(n, A, shape));
      auto rhs = y_elem(n, A, shape).scaled(A.v_power(2 * longest_length(shape)));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("hecke: cellular basis elements in small cases") {
  LaurentRing A;
  Partition la = Partition::parse("2,1");
  Tableau t0 = Tableau::parse("1,2/3");
  Tableau t1 = Tableau::parse("1,3/2");
  Permutation s1 = Permutation::transposition(3, 1);
  Permutation s2 = Permutation::transposition(3, 2);

  auto m00 = murphy_elt(3, A, la, t0, t0);
  CHECK(m00 == x_elem(3, A, la));

  auto m01 = murphy_elt(3, A, la, t0, t1);
  CHECK(m01.term_count() == 2);
  CHECK(m01.coeff(s2) == LaurentPoly(1));
  CHECK(m01.coeff(s1 * s2) == LaurentPoly(1));

  auto m10 = murphy_elt(3, A, la, t1, t0);
  CHECK(m10 == star(m01));

  // star exchanges the tableau pair in general
  for (int n = 2; n <= 4; ++n)
    for (const Partition& shape : partitions_of(n)) {
      auto tabs = standard_tableaux(shape);
      for (const Tableau& s : tabs)
        for (const Tableau& t : tabs)
          CHECK(star(murphy_elt(n, A, shape, s, t)) == murphy_elt(n, A, shape, t, s));
    }

  CHECK_THROWS_AS(murphy_elt(3, A, la, t0, Tableau::parse("1,2,3")),
                  std::invalid_argument);
}

TEST_CASE("hecke: cellular basis spans with unit determinant") {
  LaurentRing A;
  for (int n = 2; n <= 4; ++n) {
    auto mb = murphy_basis(n, A);
    CHECK(mb.index.size() == mb.perms.size());

    LaurentPoly det = det_domain(A, mb.change_of_basis);
    REQUIRE(det.is_unit());
    auto u = det.unit_part();
    CHECK((u.sign == 1 || u.sign == -1));
  }

  // identity round trip through the coordinate solver over Q(v)
  RationalFunctionField F;
  auto mbf = murphy_basis(4, F);
  MurphySolver<RationalFunctionField> solver(mbf);
  for (size_t j = 0; j < mbf.elements.size(); ++j) {
    auto c = solver.coords(mbf.elements[j]);
    for (size_t k = 0; k < c.size(); ++k)
      CHECK(c[k] == (k == j ? F.one() : F.zero()));
  }

  // random element round trip
  for (int it = 0; it < 5; ++it) {
    auto h = random_elt(4, F, 6);
    auto c = solver.coords(h);
    HeckeElt<RationalFunctionField> back(4, F);
    for (size_t j = 0; j < c.size(); ++j) back += mbf.elements[j].scaled(c[j]);
    CHECK(back == h);
  }
}

TEST_CASE("hecke: one-dimensional representations") {
  LaurentRing A;
  const int n = 4;
  auto q = A.v_power(2);
  for (int i = 1; i < n; ++i) {
    auto ti = t_basis(n, A, Permutation::transposition(n, i));
    CHECK(trivial_rep(ti) == q);
    CHECK(sign_rep(ti) == LaurentPoly(-1));
  }
  for (int it = 0; it < 10; ++it) {
    auto a = random_elt(n, A, 4), b = random_elt(n, A, 4);
    auto ab = hecke_mul(a, b);
    CHECK(trivial_rep(ab) == trivial_rep(a) * trivial_rep(b));
    CHECK(sign_rep(ab) == sign_rep(a) * sign_rep(b));
  }
}

TEST_CASE("hecke: bilinear form basics") {
  LaurentRing A;
  const int n = 3;

  // T-basis orthogonality
  for (const Permutation& u : all_permutations(n))
    for (const Permutation& w : all_permutations(n)) {
      auto val = bilinear_form(t_basis(n, A, u), t_basis(n, A, w));
      if (u == w) CHECK(val == A.v_power(2 * u.length()));
      else CHECK(val.is_zero());
    }

  for (int it = 0; it < 12; ++it) {
    auto a = random_elt(4, A, 5), b = random_elt(4, A, 5), d = random_elt(4, A, 3);
    CHECK(bilinear_form(a, b) == bilinear_form(b, a));
    CHECK(bilinear_form_fast(a, b) == bilinear_form(a, b));
    // right and left adjointness
    CHECK(bilinear_form(hecke_mul(a, d), b) == bilinear_form(a, hecke_mul(b, star(d))));
    CHECK(bilinear_form(hecke_mul(d, a), b) == bilinear_form(a, hecke_mul(star(d), b)));
  }
}

TEST_CASE("hecke: pairing of the cellular basis against its sharp twist") {
  LaurentRing A;
  for (int n = 2; n <= 4; ++n) {
    auto mb = murphy_basis(n, A);
    std::vector<HeckeElt<LaurentRing>> sharped;
    sharped.reserve(mb.elements.size());
    for (const auto& e : mb.elements) sharped.push_back(sharp(e));

    for (size_t i = 0; i < mb.index.size(); ++i)
      for (size_t j = 0; j < mb.index.size(); ++j) {
        const auto& [shape_st, s, t] = mb.index[i];
        const auto& [shape_uw, u, w] = mb.index[j];
        auto val = bilinear_form_fast(mb.elements[i], sharped[j]);
        bool allowed = tableau_dominates(u.transposed(), s) && tableau_dominates(w.transposed(), t);
        if (!allowed) CHECK(val.is_zero());
        if (shape_st == shape_uw.transpose() && s == u.transposed() && w.transposed() == t) {
          // diagonal pairs evaluate to +/- v^{2b}
          REQUIRE(val.is_unit());
          long b = col_word(shape_uw).length() + longest_length(shape_uw);
          CHECK(val.unit_part().exp == 2 * b);
        }
      }
  }
}
