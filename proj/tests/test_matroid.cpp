#include <algorithm>
#include <random>

#include "cwpower/matroid.hpp"
#include "cwpower/mpoly.hpp"
#include "doctest.h"
#include "support/matroid_oracle.hpp"

using namespace cwp;

namespace {

Integer ipow(unsigned b, unsigned e) {
  Integer out = 1;
  for (unsigned i = 0; i < e; ++i) out *= b;
  return out;
}

QMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  QMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

// V(x0 + ... + xm) in P^n.
LinearSpaceEmbedding hyperplane(unsigned m, unsigned n) {
  QMatrix a(1, n + 1);
  for (unsigned i = 0; i <= m; ++i) a(0, i) = 1;
  return LinearSpaceEmbedding::from_equations(a);
}

std::vector<std::vector<mpq_class>> rows_of(const QMatrix& b) {
  std::vector<std::vector<mpq_class>> out;
  for (std::size_t i = 0; i < b.rows(); ++i) out.push_back(b.row(i));
  return out;
}

// Random full-rank embedding built from blocks, zero rows and sparse entries.
QMatrix random_embedding(std::mt19937_64& rng, unsigned max_n, unsigned max_k) {
  std::uniform_int_distribution<int> coin(0, 3), entry(-4, 4);
  while (true) {
    const unsigned k = std::uniform_int_distribution<unsigned>(0, max_k)(rng);
    const unsigned n = std::uniform_int_distribution<unsigned>(k, max_n)(rng);
    QMatrix b(n + 1, k + 1);
    const bool blocky = coin(rng) == 0;
    const bool sparse = coin(rng) == 1;
    const unsigned zero_rows = coin(rng) == 2 ? std::uniform_int_distribution<unsigned>(1, 2)(rng) : 0;
    for (unsigned i = 0; i <= n; ++i) {
      for (unsigned j = 0; j <= k; ++j) {
        if (blocky && (i % 2) != (j % 2)) continue;
        if (sparse && coin(rng) == 0) continue;
        b(i, j) = entry(rng);
      }
    }
    for (unsigned z = 0; z < zero_rows && z <= n; ++z)
      for (unsigned j = 0; j <= k; ++j) b(n - z, j) = 0;
    if (rank(b) == k + 1) return b;
  }
}

CycMatrix stacked_with_action(const QMatrix& b, const std::vector<unsigned>& e, unsigned r) {
  CycMatrix m(b.rows(), 2 * b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      m(i, j) = Cyc(b(i, j));
      m(i, b.cols() + j) = Cyc(b(i, j)) * Cyc::zeta(r, e[i]);
    }
  return m;
}

}  // namespace

TEST_CASE("hyperplane matroids and degrees") {
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned m = 1; m <= n; ++m) {
      const auto l = hyperplane(m, n);
      const auto summary = matroid_summary(l);
      CHECK(summary.coloops.empty());
      std::vector<unsigned> big(m + 1);
      std::iota(big.begin(), big.end(), 0U);
      REQUIRE(summary.components.size() == n - m + 1);
      CHECK(summary.components.front() == big);
      for (unsigned i = m + 1; i <= n; ++i)
        CHECK(summary.components[i - m] == std::vector<unsigned>{i});
      for (unsigned r : {2U, 3U, 4U}) CHECK(degree_linear_power(l, r) == ipow(r, m - 1));
    }
    const auto coordinate = hyperplane(0, n);
    CHECK(matroid_summary(coordinate).coloops == std::vector<unsigned>{0});
    CHECK(degree_linear_power(coordinate, 3) == 1);
  }
}

TEST_CASE("zero rows are coloops") {
  const LinearSpaceEmbedding l(from_rows({{1, 0}, {0, 1}, {0, 0}, {1, 1}}));
  const auto summary = matroid_summary(l);
  CHECK(summary.coloops == std::vector<unsigned>{2});
  CHECK(summary.components == std::vector<std::vector<unsigned>>{{0, 1, 3}, {2}});
  CHECK(stab_fix_linear(l, 3).fix == 3);
}

TEST_CASE("generic spaces have uniform matroids") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> entry(-20, 20);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned k = 1 + trial % 3, n = k + 1 + trial % 4;
    QMatrix b(n + 1, k + 1);
    for (unsigned i = 0; i <= n; ++i)
      for (unsigned j = 0; j <= k; ++j) b(i, j) = entry(rng);
    bool generic = true;
    // Every (k+1)-subset of rows independent makes the matroid uniform.
    std::vector<bool> pick(n + 1, false);
    std::fill(pick.begin(), pick.begin() + k + 1, true);
    do {
      QMatrix sub;
      for (unsigned i = 0; i <= n; ++i)
        if (pick[i]) sub.append_row(b.row(i));
      generic = generic && rank(sub) == k + 1;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!generic) continue;
    const LinearSpaceEmbedding l(b);
    const auto summary = matroid_summary(l);
    CHECK(summary.coloops.empty());
    CHECK(summary.components.size() == 1);
    CHECK(degree_linear_power(l, 2) == ipow(2, k));
  }
}

TEST_CASE("generic line in P3 under squaring") {
  const LinearSpaceEmbedding l(from_rows({{1, 0}, {0, 1}, {1, 2}, {3, -1}}));
  const GroupData g = stab_fix_linear(l, 2);
  CHECK(g.fix == 1);
  CHECK(g.stab == 1);
  CHECK(degree_linear_power(l, 2) == 2);
  CHECK(degree_from_group_data(g, 1, 1) == 2);
  const GroupData h = stab_fix_linear(hyperplane(3, 3), 2);
  CHECK(h.fix == 1);
  CHECK(h.stab == 1);
}

TEST_CASE("components agree with brute-force separators and stab/fix with the matroid") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const QMatrix b = random_embedding(rng, 8, 4);
    const LinearSpaceEmbedding l(b);
    const auto summary = matroid_summary(l);
    REQUIRE(summary.components == oracle::brute_components(rows_of(b)));

    // Another basis scan order gives the same partition.
    std::vector<unsigned> order(b.rows());
    std::iota(order.begin(), order.end(), 0U);
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(matroid_summary(l, order).components == summary.components);

    const unsigned r = 2 + trial % 2;
    const GroupData g = stab_fix_linear(l, r);
    CHECK(g.fix == ipow(r, summary.s()));
    CHECK(g.stab == ipow(r, summary.t() - 1));
    const Integer deg = degree_linear_power(summary, r);
    CHECK(deg <= ipow(r, summary.k));
    CHECK(degree_from_group_data(g, summary.k, 1) == Rational(deg));
  }
}

TEST_CASE("stabilizer agrees with the rank test over the cyclotomic field") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const QMatrix b = random_embedding(rng, 4, 2);
    const LinearSpaceEmbedding l(b);
    for (unsigned r : {2U, 3U, 4U}) {
      unsigned long long stab = 0;
      for_each_group_element(r, static_cast<unsigned>(b.rows()), [&](const GroupElement& g) {
        if (rank(stacked_with_action(b, g.expo(), r)) == b.cols()) ++stab;
      });
      CHECK(stab_fix_linear(l, r).stab == Integer(std::to_string(stab)));
    }
  }
}

TEST_CASE("degree is invariant under row permutations and rescaling") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> scale(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const QMatrix b = random_embedding(rng, 7, 3);
    std::vector<unsigned> perm(b.rows());
    std::iota(perm.begin(), perm.end(), 0U);
    std::shuffle(perm.begin(), perm.end(), rng);
    QMatrix c(b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i) {
      Rational s(scale(rng) * (scale(rng) % 2 ? 1 : -1), scale(rng));
      s.canonicalize();
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = b(perm[i], j) * s;
    }
    for (unsigned r : {2U, 3U})
      CHECK(degree_linear_power(LinearSpaceEmbedding(b), r) == degree_linear_power(LinearSpaceEmbedding(c), r));
  }
}

TEST_CASE("rank deficient embeddings are rejected") {
  CHECK_THROWS_AS(LinearSpaceEmbedding(from_rows({{1, 2}, {2, 4}, {3, 6}})), Error);
  CHECK_THROWS_AS(stab_fix_linear(hyperplane(3, 12), 4, Budget{1000, 1, 1}), Error);
}

TEST_CASE("degree from group data") {
  CHECK(degree_from_group_data(GroupData{1, 16, 2}, 3, 8) == 4);
  CHECK(degree_from_group_data(GroupData{1, 1, 3}, 4, 1) == 81);
  // fix = r^s, stab = r^(t-1) reproduces r^(k+s-t+1).
  CHECK(degree_from_group_data(GroupData{9, 27, 3}, 3, 1) == ipow(3, 3 + 2 - 4 + 1));
}

TEST_CASE("sampled stabilizer of SO(3)") {
  for (std::uint64_t seed = 1; seed <= 2; ++seed) {
    const GroupData g = stab_fix_so(3, 2, seed);
    CHECK(g.stab == 16);
    CHECK(g.fix == 1);
    CHECK(degree_from_group_data(g, 3, ortho_degree(3).deg_so) == 4);
  }
  const auto p = so_cayley_sample(3, 9);
  CHECK(so_membership(p, 3));
  auto q = p;
  q[1] = -q[1];
  CHECK_FALSE(so_membership(q, 3));
}

TEST_CASE("sampled oracle on simple varieties") {
  // A coordinate point is fixed by everything.
  const unsigned nv = 4;
  auto point = [](std::size_t) { return std::vector<Cyc>{Cyc(1L), Cyc(), Cyc(), Cyc()}; };
  auto is_point = [](const std::vector<Cyc>& p) {
    return !p[0].is_zero() && p[1].is_zero() && p[2].is_zero() && p[3].is_zero();
  };
  for (unsigned r : {2U, 3U}) {
    const GroupData g = stab_fix_sampled(is_point, point, r, nv, 5);
    CHECK(g.stab == ipow(r, nv - 1));
    CHECK(g.fix == ipow(r, nv - 1));
  }
  // The hyperplane x0 + x1 + x2 + x3 = 0 matches the linear enumeration.
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::vector<std::vector<Cyc>> samples;
  for (int i = 0; i < 25; ++i) {
    const long a = entry(rng), b = entry(rng), c = entry(rng);
    samples.push_back({Cyc(-a - b - c), Cyc(a), Cyc(b), Cyc(c)});
  }
  auto on_plane = [](const std::vector<Cyc>& p) { return (p[0] + p[1] + p[2] + p[3]).is_zero(); };
  const GroupData sampled =
      stab_fix_sampled(on_plane, [&](std::size_t i) { return samples[i]; }, 2, nv, samples.size());
  const GroupData exact = stab_fix_linear(hyperplane(3, 3), 2);
  CHECK(sampled.stab == exact.stab);
  CHECK(sampled.fix == exact.fix);
}

TEST_CASE("orthogonal group degrees") {
  const std::vector<std::string> deg_so = {"1", "2", "8", "40", "384", "4768", "111616", "3433600"};
  const std::vector<std::string> deg_sq = {"1", "1", "4", "40", "1536", "152576", "57147392", "56256102400"};
  for (unsigned m = 1; m <= 8; ++m) {
    const auto d = ortho_degree(m);
    CHECK(d.deg_so == Integer(deg_so[m - 1]));
    CHECK(d.deg_o_squared == Integer(deg_sq[m - 1]));
    CHECK(d.deg_o_squared <= ipow(2, (m - 1) * (m - 1)));
  }
}
