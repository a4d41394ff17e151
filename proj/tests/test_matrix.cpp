#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heckealg/matrix.hpp"

using namespace heckealg;

namespace {

std::mt19937_64 rng(1357911u);

Matrix<Int> random_int_matrix(size_t r, size_t c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  Matrix<Int> m(r, c, Int(0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m(i, j) = Int(d(rng));
  return m;
}

LaurentPoly small_laurent() {
  std::uniform_int_distribution<long> min_exp(-2, 1);
  std::uniform_int_distribution<size_t> len(1, 3);
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::vector<Int> cs(len(rng));
  for (auto& c : cs) c = Int(coeff(rng));
  return LaurentPoly::from_coeffs(min_exp(rng), std::move(cs));
}

// expansion by minors, the independent determinant oracle
Int det_expansion(const Matrix<Int>& m) {
  size_t n = m.rows();
  if (n == 0) return Int(1);
  if (n == 1) return m(0, 0);
  Int acc(0);
  for (size_t k = 0; k < n; ++k) {
    if (m(0, k) == 0) continue;
    Matrix<Int> sub(n - 1, n - 1, Int(0));
    for (size_t i = 1; i < n; ++i) {
      size_t jj = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        sub(i - 1, jj++) = m(i, j);
      }
    }
    Int term = m(0, k) * det_expansion(sub);
    acc += (k % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace

TEST_CASE("matrix: multiplication against the defining sum") {
  IntRing zz;
  Matrix<Int> a = random_int_matrix(3, 4, 50);
  Matrix<Int> b = random_int_matrix(4, 2, 50);
  Matrix<Int> c = mat_mul(zz, a, b);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 2; ++j) {
      Int acc(0);
      for (size_t k = 0; k < 4; ++k) acc += a(i, k) * b(k, j);
      CHECK(c(i, j) == acc);
    }
  CHECK_THROWS_AS(mat_mul(zz, a, a), std::invalid_argument);

  auto id = Matrix<Int>::identity(4, Int(1), Int(0));
  CHECK(mat_mul(zz, a, id) == a);
}

TEST_CASE("bareiss: integer determinants match expansion by minors") {
  IntRing zz;
  Matrix<Int> m22(2, 2, Int(0));
  m22(0, 0) = 1; m22(0, 1) = 2; m22(1, 0) = 3; m22(1, 1) = 4;
  CHECK(det_domain(zz, m22) == Int(-2));

  for (int it = 0; it < 40; ++it) {
    size_t n = 1 + static_cast<size_t>(it % 5);
    Matrix<Int> m = random_int_matrix(n, n, 30);
    CHECK(det_domain(zz, m) == det_expansion(m));
  }

  // singular
  Matrix<Int> s(2, 2, Int(0));
  s(0, 0) = 2; s(0, 1) = 4; s(1, 0) = 1; s(1, 1) = 2;
  CHECK(det_domain(zz, s) == Int(0));
}

TEST_CASE("bareiss: laurent determinants") {
  LaurentRing lr;
  Matrix<LaurentPoly> m(2, 2, LaurentPoly());
  m(0, 0) = LaurentPoly::v_power(1);
  m(0, 1) = LaurentPoly(1);
  m(1, 0) = LaurentPoly(1);
  m(1, 1) = LaurentPoly::v_power(-1);
  CHECK(det_domain(lr, m).is_zero());

  m(1, 0) = LaurentPoly();
  CHECK(det_domain(lr, m) == LaurentPoly(1));

  // multiplicativity on random 3x3
  for (int it = 0; it < 15; ++it) {
    Matrix<LaurentPoly> a(3, 3, LaurentPoly()), b(3, 3, LaurentPoly());
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) {
        a(i, j) = small_laurent();
        b(i, j) = small_laurent();
      }
    CHECK(det_domain(lr, mat_mul(lr, a, b)) == det_domain(lr, a) * det_domain(lr, b));
  }
}

TEST_CASE("rank over the three fields") {
  RationalFunctionField qv;
  Matrix<RationalFunction> m(2, 2, qv.zero());
  m(0, 0) = qv.one();
  m(0, 1) = qv.v_power(1);
  m(1, 0) = qv.v_power(1);
  m(1, 1) = qv.v_power(2);
  CHECK(mat_rank(qv, m) == 1);
  m(1, 1) = qv.v_power(2) + qv.one();
  CHECK(mat_rank(qv, m) == 2);

  RationalAtQ qq(Rat(2));
  Matrix<Rat> mq(3, 2, Rat(0));
  mq(0, 0) = Rat(1, 2); mq(0, 1) = Rat(3);
  mq(1, 0) = Rat(1); mq(1, 1) = Rat(6);
  mq(2, 0) = Rat(2); mq(2, 1) = Rat(12);
  CHECK(mat_rank(qq, mq) == 1);

  PrimeFieldAtQ f2(2, 1);
  Matrix<GFpElem> mf(2, 3, f2.zero());
  mf(0, 0) = f2.one(); mf(0, 1) = f2.one(); mf(0, 2) = f2.zero();
  mf(1, 0) = f2.one(); mf(1, 1) = f2.one(); mf(1, 2) = f2.one();
  CHECK(mat_rank(f2, mf) == 2);
}

TEST_CASE("kernel bases over the rational function field") {
  RationalFunctionField qv;
  Matrix<RationalFunction> m(1, 2, qv.zero());
  m(0, 0) = qv.one();
  m(0, 1) = qv.v_power(1);
  auto k = kernel_basis(qv, m);
  REQUIRE(k.size() == 1);
  // normalized: primitive laurent entries, positive leading first entry
  CHECK(k[0][0] == RationalFunction(LaurentPoly::v_power(1)));
  CHECK(k[0][1] == RationalFunction(LaurentPoly(-1)));

  // random matrices: every kernel vector annihilates, count matches rank
  for (int it = 0; it < 12; ++it) {
    size_t r = 2 + static_cast<size_t>(it % 3), c = r + 1 + static_cast<size_t>(it % 2);
    Matrix<RationalFunction> a(r, c, qv.zero());
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j)
        a(i, j) = RationalFunction(small_laurent());
    auto kb = kernel_basis(qv, a);
    CHECK(kb.size() == c - mat_rank(qv, a));
    for (const auto& x : kb) {
      for (size_t i = 0; i < r; ++i) {
        RationalFunction acc;
        for (size_t j = 0; j < c; ++j) acc += a(i, j) * x[j];
        CHECK(acc.is_zero());
      }
    }
    // kernel vectors are independent
    CHECK(row_space_rank(qv, kb) == kb.size());
  }
}

TEST_CASE("kernel bases over GF(p) and Q") {
  PrimeFieldAtQ f3(3, 1);
  for (int it = 0; it < 20; ++it) {
    Matrix<GFpElem> a(3, 5, f3.zero());
    std::uniform_int_distribution<long> d(0, 2);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 5; ++j) a(i, j) = GFpElem(3, d(rng));
    auto kb = kernel_basis(f3, a);
    CHECK(kb.size() == 5 - mat_rank(f3, a));
    for (const auto& x : kb)
      for (size_t i = 0; i < 3; ++i) {
        GFpElem acc = f3.zero();
        for (size_t j = 0; j < 5; ++j) acc += a(i, j) * x[j];
        CHECK(acc.is_zero());
      }
  }

  RationalAtQ qq(Rat(1, 2));
  Matrix<Rat> b(2, 4, Rat(0));
  b(0, 0) = Rat(1); b(0, 1) = Rat(1, 3); b(0, 2) = Rat(0); b(0, 3) = Rat(2);
  b(1, 0) = Rat(0); b(1, 1) = Rat(1); b(1, 2) = Rat(5, 7); b(1, 3) = Rat(1);
  auto kb = kernel_basis(qq, b);
  CHECK(kb.size() == 2);
  for (const auto& x : kb)
    for (size_t i = 0; i < 2; ++i) {
      Rat acc(0);
      for (size_t j = 0; j < 4; ++j) acc += b(i, j) * x[j];
      CHECK(acc == 0);
    }
}

TEST_CASE("row span helpers") {
  RationalAtQ qq(Rat(1));
  std::vector<std::vector<Rat>> rows{{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(1)}};
  CHECK(row_space_rank(qq, rows) == 2);
  CHECK(in_row_span(qq, rows, {Rat(2), Rat(3), Rat(5)}));
  CHECK(!in_row_span(qq, rows, {Rat(0), Rat(0), Rat(1)}));
  std::vector<std::vector<Rat>> rows2{{Rat(1), Rat(1), Rat(2)}, {Rat(1), Rat(-1), Rat(0)}};
  CHECK(row_spans_equal(qq, rows, rows2));
  std::vector<std::vector<Rat>> rows3{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(1)}};
  CHECK(!row_spans_equal(qq, rows, rows3));
}

TEST_CASE("linear solver: repeated exact solves") {
  RationalFunctionField qv;
  for (int it = 0; it < 8; ++it) {
    size_t n = 3 + static_cast<size_t>(it % 2);
    Matrix<RationalFunction> c(n, n, qv.zero());
    for (;;) {
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) c(i, j) = RationalFunction(small_laurent());
      if (mat_rank(qv, c) == n) break;
    }
    LinearSolver<RationalFunctionField> solver(qv, c);
    for (int s = 0; s < 3; ++s) {
      std::vector<RationalFunction> b(n);
      for (auto& e : b) e = RationalFunction(small_laurent());
      auto x = solver.solve(b);
      for (size_t i = 0; i < n; ++i) {
        RationalFunction acc;
        for (size_t j = 0; j < n; ++j) acc += c(i, j) * x[j];
        CHECK(acc == b[i]);
      }
    }
  }

  PrimeFieldAtQ f5(5, 2);
  Matrix<GFpElem> cm(2, 2, f5.zero());
  cm(0, 0) = GFpElem(5, 2); cm(0, 1) = GFpElem(5, 1);
  cm(1, 0) = GFpElem(5, 1); cm(1, 1) = GFpElem(5, 4);  // det = 7, invertible mod 5
  LinearSolver<PrimeFieldAtQ> fs(f5, cm);
  auto x = fs.solve({GFpElem(5, 1), GFpElem(5, 0)});
  CHECK(cm(0, 0) * x[0] + cm(0, 1) * x[1] == GFpElem(5, 1));
  CHECK(cm(1, 0) * x[0] + cm(1, 1) * x[1] == GFpElem(5, 0));

  // singular matrices refuse
  Matrix<GFpElem> sing(2, 2, f5.zero());
  sing(0, 0) = f5.one(); sing(0, 1) = f5.one();
  sing(1, 0) = f5.one(); sing(1, 1) = f5.one();
  CHECK_THROWS_AS(LinearSolver<PrimeFieldAtQ>(f5, sing), std::domain_error);
}

TEST_CASE("characteristic polynomials over Q") {
  // rotation matrix: x^2 + 1
  Matrix<Rat> rot(2, 2, Rat(0));
  rot(0, 1) = Rat(1);
  rot(1, 0) = Rat(-1);
  auto cp = charpoly_rational(rot);
  REQUIRE(cp.size() == 2);
  CHECK(cp[0] == Rat(1));
  CHECK(cp[1] == Rat(0));

  // diagonal: (x-2)(x-3)(x+1) = x^3 - 4x^2 + x + 6
  Matrix<Rat> d(3, 3, Rat(0));
  d(0, 0) = Rat(2); d(1, 1) = Rat(3); d(2, 2) = Rat(-1);
  auto cd = charpoly_rational(d);
  CHECK(cd[2] == Rat(-4));
  CHECK(cd[1] == Rat(1));
  CHECK(cd[0] == Rat(6));

  // constant term is (-1)^n det
  for (int it = 0; it < 10; ++it) {
    Matrix<Int> mi = random_int_matrix(4, 4, 6);
    Matrix<Rat> mq(4, 4, Rat(0));
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) mq(i, j) = Rat(mi(i, j));
    CHECK(charpoly_rational(mq)[0] == Rat(det_expansion(mi)));
  }
}

TEST_CASE("specializing laurent matrices") {
  Matrix<LaurentPoly> m(2, 2, LaurentPoly());
  m(0, 0) = LaurentPoly::v_power(2);
  m(0, 1) = LaurentPoly(1) + LaurentPoly::v_power(1);
  m(1, 1) = LaurentPoly::v_power(-1);
  RationalAtQ q2(Rat(2));
  auto s = specialize_matrix(q2, m);
  CHECK(s(0, 0) == Rat(4));
  CHECK(s(0, 1) == Rat(3));
  CHECK(s(1, 0) == Rat(0));
  CHECK(s(1, 1) == Rat(1, 2));
}
