#include "heckealg/matrix.hpp"

namespace heckealg {

std::vector<Rat> charpoly_rational(const Matrix<Rat>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("charpoly_rational: matrix not square");
  size_t n = a.rows();
  std::vector<Rat> c(n, Rat(0));
  if (n == 0) return c;
  // trace recursion: M_1 = A, c_{n-k} = -tr(M_k)/k, M_{k+1} = A (M_k + c_{n-k} I)
  Matrix<Rat> m = a;
  for (size_t k = 1; k <= n; ++k) {
    Rat tr(0);
    for (size_t i = 0; i < n; ++i) tr += m(i, i);
    Rat ck = -tr / Rat(static_cast<long>(k));
    c[n - k] = ck;
    if (k == n) break;
    for (size_t i = 0; i < n; ++i) m(i, i) += ck;
    // m = a * m
    Matrix<Rat> next(n, n, Rat(0));
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l) {
        if (a(i, l) == 0) continue;
        for (size_t j = 0; j < n; ++j) next(i, j) += a(i, l) * m(l, j);
      }
    m = std::move(next);
  }
  return c;
}

}  // namespace heckealg
