#pragma once

// Brute-force matroid connectivity: components are the minimal nonempty
// separators {E1 : rank(E1) + rank(complement) = rank(all)}.

#include <gmpxx.h>

#include <algorithm>
#include <vector>

namespace oracle {

// Rank of rational row vectors by integer elimination.
inline std::size_t integer_rank(std::vector<std::vector<mpq_class>> rows) {
  std::vector<std::vector<mpz_class>> m;
  for (auto& r : rows) {
    mpz_class den = 1;
    for (auto& x : r) den = lcm(den, mpz_class(x.get_den()));
    std::vector<mpz_class> ir;
    for (auto& x : r) ir.push_back(mpz_class(x * den));
    m.push_back(ir);
  }
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const mpz_class a = m[rank][c], b = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] * a - m[rank][j] * b;
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<unsigned>> brute_components(const std::vector<std::vector<mpq_class>>& rows) {
  const unsigned n = static_cast<unsigned>(rows.size());
  auto rank_of = [&](unsigned mask) {
    std::vector<std::vector<mpq_class>> sub;
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1U << i)) sub.push_back(rows[i]);
    return sub.empty() ? std::size_t{0} : integer_rank(sub);
  };
  const unsigned full = (1U << n) - 1;
  const std::size_t total = rank_of(full);
  std::vector<unsigned> separators;
  for (unsigned mask = 1; mask < full; ++mask)
    if (rank_of(mask) + rank_of(full & ~mask) == total) separators.push_back(mask);
  std::vector<unsigned> block(n, full);
  for (unsigned s : separators)
    for (unsigned i = 0; i < n; ++i)
      if (s & (1U << i)) block[i] &= s;
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(n, false);
  for (unsigned i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<unsigned> comp;
    for (unsigned j = 0; j < n; ++j)
      if (block[i] & (1U << j)) {
        comp.push_back(j);
        seen[j] = true;
      }
    out.push_back(comp);
  }
  return out;
}

}  // namespace oracle
