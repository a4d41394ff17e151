#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heckealg/modrep.hpp"
#include "heckealg/tensor.hpp"

using namespace heckealg;

namespace {

const RationalFunctionField F;

// factorial(n) / prod factorial(parts)
long multinomial(int n, const std::vector<int>& parts) {
  auto fact = [](int k) {
    long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  long d = fact(n);
  for (int p : parts) d /= fact(p);
  return d;
}

template <class R>
Matrix<typename R::Elem> u_full(int m, int n, const R& ring, const UOperator<R>& op) {
  return full_matrix(m, n, ring, op);
}

// invert a matrix with exactly one nonzero in every row and column
template <class Fld>
Matrix<typename Fld::Elem> monomial_inverse(const Fld& field, const Matrix<typename Fld::Elem>& a) {
  REQUIRE(a.rows() == a.cols());
  Matrix<typename Fld::Elem> inv(a.rows(), a.rows(), field.zero());
  for (size_t r = 0; r < a.rows(); ++r) {
    size_t hits = 0;
    for (size_t c = 0; c < a.cols(); ++c) {
      if (field.is_zero(a(r, c))) continue;
      inv(c, r) = field.div(field.one(), a(r, c));
      ++hits;
    }
    REQUIRE(hits == 1);
  }
  return inv;
}

std::vector<int> padded(const Composition& c, int m) {
  std::vector<int> w(c.parts().begin(), c.parts().end());
  w.resize(static_cast<size_t>(m), 0);
  return w;
}

}  // namespace

TEST_CASE("tensor: index enumeration and weight spaces") {
  auto all22 = all_indices(2, 2);
  REQUIRE(all22.size() == 4);
  CHECK(all22[0] == TensorIndex{1, 1});
  CHECK(all22[1] == TensorIndex{1, 2});
  CHECK(all22[2] == TensorIndex{2, 1});
  CHECK(all22[3] == TensorIndex{2, 2});

  CHECK(index_weight({2, 1, 2, 3}, 3) == std::vector<int>{1, 2, 1});

  // a weight concentrated in the first letter has a single index
  CHECK(weight_space({4}, 2, 4) == std::vector<TensorIndex>{{1, 1, 1, 1}});

  auto w22 = weight_space({2, 2}, 2, 4);
  REQUIRE(w22.size() == 6);
  CHECK(w22.front() == TensorIndex{1, 1, 2, 2});
  CHECK(w22.back() == TensorIndex{2, 2, 1, 1});
  for (size_t k = 1; k < w22.size(); ++k) CHECK(w22[k - 1] < w22[k]);

  // weight spaces partition the tensor basis, with multinomial dimensions
  size_t total = 0;
  for (const TensorIndex& idx : all_indices(3, 4)) {
    auto w = index_weight(idx, 3);
    long s = 0;
    for (int p : w) s += p;
    CHECK(s == 4);
    ++total;
  }
  CHECK(total == 81);
  size_t covered = 0;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b) {
      std::vector<int> w{a, b, 4 - a - b};
      auto space = weight_space(w, 3, 4);
      CHECK(static_cast<long>(space.size()) == multinomial(4, w));
      covered += space.size();
    }
  CHECK(covered == 81);

  CHECK(weight_space({-1, 5}, 2, 4).empty());
  CHECK_THROWS_AS(weight_space({1, 1}, 2, 4), std::invalid_argument);
}

TEST_CASE("tensor: vector representation and coproduct expansion") {
  // one site: E_1 sends e_2 to e_1 and kills e_1
  auto e1 = full_matrix(2, 1, F, u_generator_e(2, 1, F, 1));
  CHECK(e1(1, 0) == F.one());  // row of (2), column of (1)
  CHECK(e1(0, 0) == F.zero());
  CHECK(e1(0, 1) == F.zero());
  CHECK(e1(1, 1) == F.zero());

  auto f1 = full_matrix(2, 1, F, u_generator_f(2, 1, F, 1));
  CHECK(f1(0, 1) == F.one());  // e_1 -> e_2

  // two sites: E_1 applied to e_2 (x) e_2 gives v^{-1} e_1 (x) e_2 + e_2 (x) e_1
  auto img = u_generator_e(2, 2, F, 1).apply({2, 2});
  REQUIRE(img.size() == 2);
  CHECK(img.at({1, 2}) == F.v_power(-1));
  CHECK(img.at({2, 1}) == F.one());

  // K_1 is diagonal with the letter-count exponents
  auto k1 = u_generator_k(2, 3, F, 1).apply({1, 2, 1});
  REQUIRE(k1.size() == 1);
  CHECK(k1.at({1, 2, 1}) == F.v_power(1));  // two 1s, one 2
}

TEST_CASE("tensor: quantum group relations hold on tensor space") {
  std::vector<std::vector<long>> sample_h = {{1, 0, 0, 0}, {0, -1, 2, 0}, {1, 1, -1, 3}};
  for (int m = 2; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      auto id = Matrix<RationalFunction>::identity(
          static_cast<size_t>([&] {
            long d = 1;
            for (int k = 0; k < n; ++k) d *= m;
            return d;
          }()),
          F.one(), F.zero());

      // powers of v^h compose additively and v^0 is the identity
      CHECK(u_full(m, n, F, u_cartan(m, n, F, std::vector<long>(static_cast<size_t>(m), 0))) == id);
      for (const auto& ha : sample_h)
        for (const auto& hb : sample_h) {
          std::vector<long> hs(4);
          for (int k = 0; k < 4; ++k) hs[static_cast<size_t>(k)] = ha[static_cast<size_t>(k)] + hb[static_cast<size_t>(k)];
          std::vector<long> ta(ha.begin(), ha.begin() + m), tb(hb.begin(), hb.begin() + m),
              ts(hs.begin(), hs.begin() + m);
          CHECK(u_full(m, n, F, u_product(F, u_cartan(m, n, F, ta), u_cartan(m, n, F, tb))) ==
                u_full(m, n, F, u_cartan(m, n, F, ts)));
        }

      for (int i = 1; i < m; ++i) {
        auto E = u_generator_e(m, n, F, i);
        auto Fi = u_generator_f(m, n, F, i);

        // conjugation by v^h rescales by the root pairing
        for (const auto& h : sample_h) {
          std::vector<long> t(h.begin(), h.begin() + m);
          std::vector<long> tneg = t;
          for (auto& x : tneg) x = -x;
          auto vh = u_cartan(m, n, F, t), vhi = u_cartan(m, n, F, tneg);
          long alpha = t[static_cast<size_t>(i - 1)] - t[static_cast<size_t>(i)];
          CHECK(u_full(m, n, F, u_product(F, u_product(F, vh, E), vhi)) ==
                mat_scale(F, F.v_power(alpha), u_full(m, n, F, E)));
          CHECK(u_full(m, n, F, u_product(F, u_product(F, vh, Fi), vhi)) ==
                mat_scale(F, F.v_power(-alpha), u_full(m, n, F, Fi)));
        }

        // commutators of raising and lowering generators
        for (int j = 1; j < m; ++j) {
          auto Fj = u_generator_f(m, n, F, j);
          auto lhs = u_sub(F, u_product(F, E, Fj), u_product(F, Fj, E));
          if (i == j) {
            CHECK(u_full(m, n, F, lhs) == u_full(m, n, F, u_cartan_quotient(m, n, F, i, i + 1)));
          } else {
            CHECK(u_full(m, n, F, lhs) ==
                  Matrix<RationalFunction>(id.rows(), id.cols(), F.zero()));
          }
        }

        // quantum Serre relations for adjacent pairs
        for (int j = 1; j < m; ++j) {
          if (std::abs(i - j) != 1) continue;
          auto Ej = u_generator_e(m, n, F, j);
          auto serre_e =
              u_add(F,
                    u_sub(F, u_product(F, u_product(F, E, E), Ej),
                          u_scale(F, F.v_power(1) + F.v_power(-1),
                                  u_product(F, u_product(F, E, Ej), E))),
                    u_product(F, Ej, u_product(F, E, E)));
          CHECK(u_full(m, n, F, serre_e) ==
                Matrix<RationalFunction>(id.rows(), id.cols(), F.zero()));
          auto Gj = u_generator_f(m, n, F, j);
          auto serre_f =
              u_add(F,
                    u_sub(F, u_product(F, u_product(F, Fi, Fi), Gj),
                          u_scale(F, F.v_power(1) + F.v_power(-1),
                                  u_product(F, u_product(F, Fi, Gj), Fi))),
                    u_product(F, Gj, u_product(F, Fi, Fi)));
          CHECK(u_full(m, n, F, serre_f) ==
                Matrix<RationalFunction>(id.rows(), id.cols(), F.zero()));
        }
      }
    }

  // distant generators commute (needs m >= 4)
  {
    int m = 4, n = 2;
    auto E1 = u_generator_e(m, n, F, 1), E3 = u_generator_e(m, n, F, 3);
    auto F1 = u_generator_f(m, n, F, 1), F3 = u_generator_f(m, n, F, 3);
    CHECK(u_full(m, n, F, u_product(F, E1, E3)) == u_full(m, n, F, u_product(F, E3, E1)));
    CHECK(u_full(m, n, F, u_product(F, F1, F3)) == u_full(m, n, F, u_product(F, F3, F1)));
  }
}

TEST_CASE("tensor: sl2 triples through every root") {
  for (int m = 2; m <= 4; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int i = 1; i < m; ++i)
        for (int j = i + 1; j <= m; ++j) {
          auto E = root_vector(m, n, F, i, j);
          auto Fv = root_vector(m, n, F, j, i);
          auto K = u_k_root(m, n, F, i, j, 1);
          auto Ki = u_k_root(m, n, F, i, j, -1);
          auto Em = u_full(m, n, F, E), Fm = u_full(m, n, F, Fv);

          CHECK(u_full(m, n, F, u_product(F, u_product(F, K, E), Ki)) ==
                mat_scale(F, F.v_power(2), Em));
          CHECK(u_full(m, n, F, u_product(F, u_product(F, K, Fv), Ki)) ==
                mat_scale(F, F.v_power(-2), Fm));

          auto comm = u_sub(F, u_product(F, E, Fv), u_product(F, Fv, E));
          CHECK(u_full(m, n, F, comm) == u_full(m, n, F, u_cartan_quotient(m, n, F, i, j)));
        }
}

TEST_CASE("tensor: root vector recursion and nilpotence") {
  // adjacent roots are the plain generators
  CHECK(u_full(3, 2, F, root_vector(3, 2, F, 1, 2)) ==
        u_full(3, 2, F, u_generator_e(3, 2, F, 1)));
  CHECK(u_full(3, 2, F, root_vector(3, 2, F, 2, 1)) ==
        u_full(3, 2, F, u_generator_f(3, 2, F, 1)));

  // the non-adjacent case spelled out
  {
    auto E1 = u_generator_e(3, 2, F, 1), E2 = u_generator_e(3, 2, F, 2);
    auto direct = u_sub(F, u_scale(F, F.v_power(-1), u_product(F, E1, E2)), u_product(F, E2, E1));
    CHECK(u_full(3, 2, F, root_vector(3, 2, F, 1, 3)) == u_full(3, 2, F, direct));

    auto F1 = u_generator_f(3, 2, F, 1), F2 = u_generator_f(3, 2, F, 2);
    auto low = u_sub(F, u_scale(F, F.v_power(1), u_product(F, F2, F1)), u_product(F, F1, F2));
    CHECK(u_full(3, 2, F, root_vector(3, 2, F, 3, 1)) == u_full(3, 2, F, low));
  }

  // weight homogeneity: entries only connect weights differing by the shift
  for (int m = 2; m <= 3; ++m)
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        if (i == j) continue;
        int n = 3;
        auto op = root_vector(m, n, F, i, j);
        auto mat = u_full(m, n, F, op);
        auto idx = all_indices(m, n);
        for (size_t r = 0; r < idx.size(); ++r)
          for (size_t c = 0; c < idx.size(); ++c) {
            if (F.is_zero(mat(r, c))) continue;
            auto wr = index_weight(idx[r], m), wc = index_weight(idx[c], m);
            for (int k = 0; k < m; ++k)
              CHECK(wc[static_cast<size_t>(k)] ==
                    wr[static_cast<size_t>(k)] + static_cast<int>(op.shift[static_cast<size_t>(k)]));
          }

        // raising or lowering often enough annihilates everything
        auto zero = Matrix<RationalFunction>(mat.rows(), mat.cols(), F.zero());
        CHECK(u_full(m, n, F, u_power(F, op, n + 1)) == zero);
      }
}

TEST_CASE("tensor: commutator identity behind the lowering injection") {
  // E^r F - F E^r = sum over s + s' = r - 1 of E^s ((K - K^{-1})/(v - v^{-1})) E^{s'}
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r) {
      int m = 2;
      auto E = root_vector(m, n, F, 1, 2);
      auto Fv = root_vector(m, n, F, 2, 1);
      auto Q = u_cartan_quotient(m, n, F, 1, 2);
      auto Er = u_power(F, E, r);
      auto lhs = u_sub(F, u_product(F, Er, Fv), u_product(F, Fv, Er));
      Matrix<RationalFunction> rhs(static_cast<size_t>(1 << n), static_cast<size_t>(1 << n),
                                   F.zero());
      for (int s = 0; s <= r - 1; ++s) {
        int sp = r - 1 - s;
        UOperator<RationalFunctionField> term = Q;
        if (s > 0) term = u_product(F, u_power(F, E, s), term);
        if (sp > 0) term = u_product(F, term, u_power(F, E, sp));
        rhs = mat_add(F, rhs, u_full(m, n, F, term));
      }
      CHECK(u_full(m, n, F, lhs) == rhs);
    }
}

TEST_CASE("tensor: hecke action on tensor space") {
  // the three defining cases
  auto c1 = hecke_apply_t(F, {1, 1}, 1);
  REQUIRE(c1.size() == 1);
  CHECK(c1.at({1, 1}) == F.v_power(2));

  auto c2 = hecke_apply_t(F, {1, 2}, 1);
  REQUIRE(c2.size() == 1);
  CHECK(c2.at({2, 1}) == F.v_power(1));

  auto c3 = hecke_apply_t(F, {2, 1}, 1);
  REQUIRE(c3.size() == 2);
  CHECK(c3.at({1, 2}) == F.v_power(1));
  CHECK(c3.at({2, 1}) == F.v_power(2) - F.one());

  // quadratic and braid relations as matrix identities
  for (int m = 2; m <= 3; ++m)
    for (int n = 2; n <= 3; ++n) {
      size_t d = 1;
      for (int k = 0; k < n; ++k) d *= static_cast<size_t>(m);
      auto id = Matrix<RationalFunction>::identity(d, F.one(), F.zero());
      for (int k = 1; k < n; ++k) {
        auto t = hecke_full_matrix(m, n, F, k);
        auto quad = mat_sub(F, mat_mul(F, t, t),
                            mat_add(F, mat_scale(F, F.v_power(2) - F.one(), t),
                                    mat_scale(F, F.v_power(2), id)));
        CHECK(quad == Matrix<RationalFunction>(d, d, F.zero()));
      }
      for (int k = 1; k + 1 < n; ++k) {
        auto a = hecke_full_matrix(m, n, F, k);
        auto b = hecke_full_matrix(m, n, F, k + 1);
        CHECK(mat_mul(F, mat_mul(F, a, b), a) == mat_mul(F, mat_mul(F, b, a), b));
      }
    }
  {
    // distant generators commute once n is large enough to hold them
    int m = 2, n = 4;
    auto a = hecke_full_matrix(m, n, F, 1);
    auto b = hecke_full_matrix(m, n, F, 3);
    CHECK(mat_mul(F, a, b) == mat_mul(F, b, a));
  }
}

TEST_CASE("tensor: the two actions commute") {
  CHECK(verify_commuting_actions(2, 1, F));
  CHECK(verify_commuting_actions(2, 2, F));
  CHECK(verify_commuting_actions(2, 3, F));
  CHECK(verify_commuting_actions(3, 2, F));
  CHECK(verify_commuting_actions(3, 3, F));
  CHECK(verify_commuting_actions(2, 4, F));
}

TEST_CASE("tensor: weight spaces match permutation modules through phi") {
  // the printed index-to-tableau example
  Tableau t = index_tableau({2, 1, 2, 3}, 3);
  CHECK(t.shape() == Composition::parse("1,2,1"));
  CHECK(t.rows() == std::vector<std::vector<int>>{{2}, {1, 3}, {4}});

  // a one-row shape gives a single index and the scalar 1
  auto top = phi_matrix(F, Composition::parse("3"), 3);
  REQUIRE(top.rows() == 1);
  REQUIRE(top.cols() == 1);
  CHECK(top(0, 0) == F.one());

  // equivariance against the permutation-module generator matrices, and
  // invertibility, for every composition shape
  for (int n = 2; n <= 4; ++n)
    for (const Composition& la : compositions_of(n)) {
      int m = n;
      auto phi = phi_matrix(F, la, m);
      PermModule<RationalFunctionField> mod(n, F, la);
      REQUIRE(phi.rows() == mod.dim());
      REQUIRE(phi.cols() == mod.dim());
      auto inv = monomial_inverse(F, phi);
      CHECK(mat_mul(F, phi, inv) ==
            Matrix<RationalFunction>::identity(phi.rows(), F.one(), F.zero()));
      for (int k = 1; k < n; ++k) {
        auto tk = hecke_weight_matrix(m, n, F, k, padded(la, m));
        CHECK(mat_mul(F, tk.matrix, phi) == mat_mul(F, phi, mod.gen_matrix(k)));
      }
    }
}

TEST_CASE("tensor: lowering maps between weight spaces") {
  // the explicit 4x6 matrix at v = 1 and its characteristic-2 degeneration
  RationalAtQ Q1{Rat(1)};
  auto f12 = embedding_map(2, 4, Q1, {3, 1}, 1, 2);
  REQUIRE(f12.matrix.rows() == 4);
  REQUIRE(f12.matrix.cols() == 6);
  int expected[4][6] = {{1, 1, 0, 1, 0, 0}, {1, 0, 1, 0, 1, 0}, {0, 1, 1, 0, 0, 1},
                        {0, 0, 0, 1, 1, 1}};
  for (size_t r = 0; r < 4; ++r)
    for (size_t c = 0; c < 6; ++c) CHECK(f12.matrix(r, c) == Rat(expected[r][c]));
  CHECK(mat_rank(Q1, f12.matrix) == 4);

  PrimeFieldAtQ g2(2, 1);
  auto f12_2 = embedding_map(2, 4, g2, {3, 1}, 1, 2);
  CHECK(mat_rank(g2, f12_2.matrix) == 3);

  // over the rational function field every admissible lowering is injective
  for (int n = 2; n <= 4; ++n)
    for (const Composition& mu : compositions_of(n)) {
      int m = n;
      auto w = padded(mu, m);
      for (int i = 1; i < m; ++i)
        for (int j = i + 1; j <= m; ++j) {
          if (w[static_cast<size_t>(i - 1)] <= w[static_cast<size_t>(j - 1)]) continue;
          auto emb = embedding_map(m, n, F, w, i, j);
          CHECK(mat_rank(F, emb.matrix) == static_cast<long>(emb.matrix.rows()));
        }
    }

  CHECK_THROWS_AS(embedding_map(2, 4, F, {2, 2}, 1, 2), std::invalid_argument);
}

TEST_CASE("tensor: lowering maps conjugated into module comparison maps") {
  // phi^{-1} . E . phi intertwines the generator matrices of the two modules
  struct Case {
    Composition la;
    int i, j;
  };
  std::vector<Case> cases = {{Composition::parse("3,1"), 1, 2},
                             {Composition::parse("2,1"), 1, 2},
                             {Composition::parse("2,2"), 2, 3},
                             {Composition::parse("2,1,1"), 1, 3}};
  for (const auto& cs : cases) {
    int n = cs.la.n(), m = std::max(n, cs.j);
    auto w = padded(cs.la, m);
    auto emb = embedding_map(m, n, F, w, cs.i, cs.j);
    Composition target(
        std::vector<int>(emb.codomain_weight.begin(), emb.codomain_weight.end()));
    auto phi_dom = phi_matrix(F, cs.la, m);
    auto phi_cod = phi_matrix(F, target, m);
    auto cmp = mat_mul(F, monomial_inverse(F, phi_dom), mat_mul(F, emb.matrix, phi_cod));
    PermModule<RationalFunctionField> dom(n, F, cs.la), cod(n, F, target);
    REQUIRE(cmp.rows() == dom.dim());
    REQUIRE(cmp.cols() == cod.dim());
    CHECK(mat_rank(F, cmp) == static_cast<long>(cmp.rows()));
    for (int k = 1; k < n; ++k)
      CHECK(mat_mul(F, dom.gen_matrix(k), cmp) == mat_mul(F, cmp, cod.gen_matrix(k)));
  }
}

TEST_CASE("tensor: chains of lowerings realize dominance comparisons") {
  // between comparable partitions, a path of single-box moves exists and the
  // composite of the lowering maps along it stays injective
  for (int n = 3; n <= 4; ++n) {
    int m = n;
    auto parts = partitions_of(n);
    for (const Partition& la : parts)
      for (const Partition& mu : parts) {
        if (!(dominates(la, mu) && !(la == mu))) continue;

        // breadth-first search through partitions by single-box moves
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
        REQUIRE(from.count(mu));

        // walk the path back and compose the maps
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
        CHECK(mat_rank(F, comp) == static_cast<long>(comp.rows()));
        CHECK(comp.rows() == weight_space(padded(la, m), m, n).size());
        CHECK(comp.cols() == weight_space(padded(mu, m), m, n).size());
      }
  }
}
