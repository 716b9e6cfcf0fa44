#include "cwpower/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "cwpower/mpoly.hpp"

namespace cwp {

namespace {

Integer power_of(unsigned base, unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

unsigned long long group_size_checked(unsigned r, unsigned n, const Budget& budget) {
  unsigned long long size = 1;
  for (unsigned i = 0; i < n; ++i) {
    size *= r;
    if (size > budget.group_elements)
      fail(ErrorCode::BudgetExceeded, "group of order " + std::to_string(r) + "^" +
                                          std::to_string(n) + " exceeds the enumeration budget of " +
                                          std::to_string(budget.group_elements));
  }
  return size;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

// Visits normalized exponent vectors of G_r on nvars coordinates without
// constructing GroupElement objects.
template <class Visit>
void enumerate_exponents(unsigned r, unsigned nvars, Visit&& visit) {
  std::vector<unsigned> e(nvars, 0);
  while (true) {
    visit(e);
    if (nvars <= 1) return;
    std::size_t i = nvars - 1;
    while (++e[i] == r) {
      e[i] = 0;
      if (i == 1) return;
      --i;
    }
  }
}

}  // namespace

LinearSpaceEmbedding::LinearSpaceEmbedding(QMatrix b) : b_(std::move(b)) {
  require(b_.rows() >= 1 && b_.cols() >= 1, ErrorCode::InvalidArgument, "empty embedding matrix");
  require(b_.cols() <= b_.rows(), ErrorCode::RankDeficient,
          "embedding matrix has more columns than rows");
  if (rank(b_) != b_.cols())
    fail(ErrorCode::RankDeficient, "embedding matrix does not have full column rank " +
                                       std::to_string(b_.cols()));
}

LinearSpaceEmbedding LinearSpaceEmbedding::from_equations(const QMatrix& a) {
  const auto basis = kernel(a);
  require(!basis.empty(), ErrorCode::InvalidArgument, "equations cut out the empty set");
  QMatrix b(a.cols(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < a.cols(); ++i) b(i, j) = basis[j][i];
  return LinearSpaceEmbedding(std::move(b));
}

bool LinearSpaceEmbedding::is_zero_row(std::size_t i) const {
  for (std::size_t j = 0; j < b_.cols(); ++j)
    if (sgn(b_(i, j)) != 0) return false;
  return true;
}

MatroidSummary matroid_summary(const LinearSpaceEmbedding& l, const std::vector<unsigned>& basis_order) {
  const QMatrix& b = l.matrix();
  const std::size_t rows = b.rows();
  const std::size_t cols = b.cols();
  std::vector<unsigned> order = basis_order;
  if (order.empty()) {
    order.resize(rows);
    std::iota(order.begin(), order.end(), 0U);
  }
  {
    std::vector<unsigned> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<unsigned> expected(rows);
    std::iota(expected.begin(), expected.end(), 0U);
    require(sorted == expected, ErrorCode::InvalidArgument, "basis order is not a permutation of the rows");
  }

  MatroidSummary out;
  out.n = l.n();
  out.k = l.k();
  for (std::size_t i = 0; i < rows; ++i)
    if (l.is_zero_row(i)) out.coloops.push_back(static_cast<unsigned>(i));

  // Greedy basis of the row vectors in the requested order.
  std::vector<unsigned> basis;
  QMatrix echelon;
  for (unsigned i : order) {
    if (l.is_zero_row(i)) continue;
    QMatrix trial = echelon;
    trial.append_row(b.row(i));
    if (rank(trial) > basis.size()) {
      echelon = std::move(trial);
      basis.push_back(i);
      if (basis.size() == cols) break;
    }
  }
  QMatrix basis_rows(cols, cols);
  for (std::size_t a = 0; a < cols; ++a)
    for (std::size_t j = 0; j < cols; ++j) basis_rows(a, j) = b(basis[a], j);
  const QMatrix inv = inverse(basis_rows);

  // Each non-basis row forms a circuit with the basis rows in its support.
  UnionFind uf(rows);
  std::vector<bool> in_basis(rows, false);
  for (unsigned i : basis) in_basis[i] = true;
  for (std::size_t i = 0; i < rows; ++i) {
    if (in_basis[i] || l.is_zero_row(i)) continue;
    for (std::size_t a = 0; a < cols; ++a) {
      Rational c = 0;
      for (std::size_t j = 0; j < cols; ++j) c += b(i, j) * inv(j, a);
      if (sgn(c) != 0) uf.unite(i, basis[a]);
    }
  }
  std::vector<std::vector<unsigned>> blocks(rows);
  for (std::size_t i = 0; i < rows; ++i) blocks[uf.find(i)].push_back(static_cast<unsigned>(i));
  for (auto& block : blocks)
    if (!block.empty()) out.components.push_back(std::move(block));
  return out;
}

Integer degree_linear_power(const MatroidSummary& m, unsigned r) {
  require(r >= 1, ErrorCode::InvalidArgument, "power must be positive");
  const long e = static_cast<long>(m.k) + m.s() - m.t() + 1;
  require(e >= 0, ErrorCode::Internal, "negative degree exponent");
  return power_of(r, static_cast<unsigned long>(e));
}

Integer degree_linear_power(const LinearSpaceEmbedding& l, unsigned r) {
  return degree_linear_power(matroid_summary(l), r);
}

GroupData stab_fix_linear(const LinearSpaceEmbedding& l, unsigned r, const Budget& budget) {
  require(r >= 1, ErrorCode::InvalidArgument, "power must be positive");
  const QMatrix& b = l.matrix();
  const unsigned nv = static_cast<unsigned>(b.rows());
  group_size_checked(r, nv - 1, budget);
  const auto& phi = cyclotomic_polynomial(r);
  const std::size_t phi_deg = phi.size() - 1;

  // tau L = L iff a^T D_tau B = 0 for every annihilator a of B, i.e.
  // sum_i a_i B_ic zeta^tau_i = 0 for each (a, c).
  std::vector<std::vector<Integer>> weights;
  for (const auto& a : kernel(b.transposed())) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      std::vector<Rational> w(nv);
      bool nonzero = false;
      for (unsigned i = 0; i < nv; ++i) {
        w[i] = a[i] * b(i, c);
        nonzero = nonzero || sgn(w[i]) != 0;
      }
      if (!nonzero) continue;
      Integer den = 1;
      for (const auto& x : w) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
      std::vector<Integer> iw(nv);
      for (unsigned i = 0; i < nv; ++i) iw[i] = Integer(w[i] * den);
      weights.push_back(std::move(iw));
    }
  }

  // Machine integers suffice when entries are small and the reduction short.
  bool small = r <= 30;
  Integer limit = Integer(1) << 40;
  for (const auto& w : weights)
    for (const auto& x : w)
      if (abs(x) * nv >= limit) small = false;
  std::vector<std::vector<long long>> wl;
  if (small)
    for (const auto& w : weights) {
      std::vector<long long> row;
      for (const auto& x : w) row.push_back(x.get_si());
      wl.push_back(std::move(row));
    }

  std::vector<__int128> acc(r);
  std::vector<Integer> acc_big(r);
  auto stabilizes = [&](const std::vector<unsigned>& e) {
    for (std::size_t p = 0; p < weights.size(); ++p) {
      if (small) {
        std::fill(acc.begin(), acc.end(), 0);
        for (unsigned i = 0; i < nv; ++i) acc[e[i]] += wl[p][i];
        for (std::size_t d = r; d-- > phi_deg;) {
          const __int128 c = acc[d];
          if (c == 0) continue;
          for (std::size_t j = 0; j < phi_deg; ++j) acc[d - phi_deg + j] -= c * phi[j];
          acc[d] = 0;
        }
        for (std::size_t j = 0; j < phi_deg; ++j)
          if (acc[j] != 0) return false;
      } else {
        for (auto& x : acc_big) x = 0;
        for (unsigned i = 0; i < nv; ++i) acc_big[e[i]] += weights[p][i];
        for (std::size_t d = r; d-- > phi_deg;) {
          const Integer c = acc_big[d];
          if (c == 0) continue;
          for (std::size_t j = 0; j < phi_deg; ++j) acc_big[d - phi_deg + j] -= c * phi[j];
          acc_big[d] = 0;
        }
        for (std::size_t j = 0; j < phi_deg; ++j)
          if (acc_big[j] != 0) return false;
      }
    }
    return true;
  };

  std::vector<unsigned> support;
  for (unsigned i = 0; i < nv; ++i)
    if (!l.is_zero_row(i)) support.push_back(i);

  unsigned long long fix = 0, stab = 0;
  enumerate_exponents(r, nv, [&](const std::vector<unsigned>& e) {
    // Fixing L pointwise: tau is constant on the non-coloop coordinates.
    bool fixes = true;
    for (unsigned i : support)
      if (e[i] != e[support.front()]) {
        fixes = false;
        break;
      }
    if (fixes) {
      ++fix;
      ++stab;
      return;
    }
    if (stabilizes(e)) ++stab;
  });
  return GroupData{Integer(std::to_string(fix)), Integer(std::to_string(stab)), r};
}

Rational degree_from_group_data(const GroupData& g, unsigned dim, const Integer& deg) {
  require(sgn(g.stab) != 0, ErrorCode::InvalidArgument, "stabilizer size must be nonzero");
  Rational out(g.fix * power_of(g.r, dim) * deg, g.stab);
  out.canonicalize();
  return out;
}

GroupData stab_fix_sampled(const MembershipTest& membership, const PointSampler& sampler, unsigned r,
                           unsigned nvars, std::size_t samples, const Budget& budget) {
  require(r >= 1 && nvars >= 1, ErrorCode::InvalidArgument, "invalid group");
  require(samples >= 1, ErrorCode::InvalidArgument, "need at least one sample point");
  group_size_checked(r, nvars - 1, budget);
  std::vector<std::vector<Cyc>> points;
  for (std::size_t i = 0; i < samples; ++i) {
    points.push_back(sampler(i));
    require(points.back().size() == nvars, ErrorCode::DimensionMismatch,
            "sample has the wrong number of coordinates");
  }
  std::vector<Cyc> zeta(r);
  for (unsigned j = 0; j < r; ++j) zeta[j] = Cyc::zeta(r, j);

  unsigned long long fix = 0, stab = 0;
  std::vector<Cyc> moved(nvars);
  enumerate_exponents(r, nvars, [&](const std::vector<unsigned>& e) {
    bool fixes = true;
    for (const auto& p : points) {
      int first = -1;
      for (unsigned i = 0; i < nvars && fixes; ++i) {
        if (p[i].is_zero()) continue;
        if (first < 0) first = static_cast<int>(e[i]);
        else if (static_cast<int>(e[i]) != first) fixes = false;
      }
      if (!fixes) break;
    }
    if (fixes) {
      ++fix;
      ++stab;
      return;
    }
    for (const auto& p : points) {
      for (unsigned i = 0; i < nvars; ++i) moved[i] = e[i] == 0 ? p[i] : p[i] * zeta[e[i]];
      if (!membership(moved)) return;
    }
    ++stab;
  });
  return GroupData{Integer(std::to_string(fix)), Integer(std::to_string(stab)), r};
}

bool so_membership(const std::vector<Cyc>& point, unsigned m) {
  require(point.size() == static_cast<std::size_t>(m) * m + 1, ErrorCode::DimensionMismatch,
          "point does not have m^2 + 1 coordinates");
  const Cyc& h = point[0];
  CycMatrix mat(m, m);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) mat(i, j) = point[1 + i * m + j];
  const CycMatrix gram = mat.transposed() * mat;
  const Cyc h2 = h * h;
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j)
      if (gram(i, j) != (i == j ? h2 : Cyc())) return false;
  return determinant(mat) == pow(h, m);
}

std::vector<Cyc> so_cayley_sample(unsigned m, std::uint64_t seed) {
  const QMatrix q = cayley_orthogonal(m, seed);
  std::vector<Cyc> point{Cyc(1L)};
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) point.emplace_back(q(i, j));
  return point;
}

GroupData stab_fix_so(unsigned m, unsigned r, std::uint64_t seed, std::size_t samples,
                      const Budget& budget) {
  require(m >= 1, ErrorCode::InvalidArgument, "matrix size must be positive");
  return stab_fix_sampled([m](const std::vector<Cyc>& p) { return so_membership(p, m); },
                          [m, seed](std::size_t i) {
                            return so_cayley_sample(m, seed * 0x9E3779B97F4A7C15ULL + i);
                          },
                          r, m * m + 1, samples, budget);
}

OrthoDegrees ortho_degree(unsigned m) {
  require(m >= 1, ErrorCode::InvalidArgument, "matrix size must be positive");
  const unsigned h = m / 2;
  auto binom = [](long a, long b) -> Integer {
    if (a < 0 || b < 0 || b > a) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return out;
  };
  std::vector<std::vector<Integer>> mat(h, std::vector<Integer>(h));
  for (unsigned i = 1; i <= h; ++i)
    for (unsigned j = 1; j <= h; ++j)
      mat[i - 1][j - 1] = binom(2L * m - 2L * i - 2L * j, static_cast<long>(m) - 2L * i);
  OrthoDegrees out;
  out.det = bareiss_determinant(mat);
  out.deg_o = power_of(2, m) * out.det;
  out.deg_so = out.deg_o / 2;
  const unsigned long e_num = static_cast<unsigned long>(m - 1) * (m - 1);
  const unsigned long e_den = static_cast<unsigned long>(m) * (m + 1) / 2;
  Rational value(power_of(2, e_num) * out.deg_o, power_of(2, e_den));
  value.canonicalize();
  require(value.get_den() == 1, ErrorCode::Internal, "orthostochastic degree is not an integer");
  out.deg_o_squared = value.get_num();
  return out;
}

}  // namespace cwp
