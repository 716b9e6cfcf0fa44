#include "cwpower/linalg.hpp"

#include <random>

namespace cwp {

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    require(row.size() == n, ErrorCode::DimensionMismatch, "determinant needs a square matrix");
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

QMatrix cayley_orthogonal(unsigned m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  QMatrix s(m, m);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = i + 1; j < m; ++j) {
      Rational x(num(rng), den(rng));
      x.canonicalize();
      s(i, j) = x;
      s(j, i) = -x;
    }
  QMatrix minus = QMatrix::identity(m), plus = QMatrix::identity(m);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) {
      minus(i, j) -= s(i, j);
      plus(i, j) += s(i, j);
    }
  // I + S is invertible for real skew S.
  return minus * inverse(plus);
}

}  // namespace cwp
