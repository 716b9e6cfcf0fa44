#include "cwpower/rank1.hpp"

#include <map>
#include <mutex>
#include <set>

#include "cwpower/error.hpp"

namespace cwp {

namespace {

Integer binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

class Collector {
 public:
  explicit Collector(Family f) : family_(f) {}

  void add(std::vector<unsigned> indices, MPoly p) {
    if (p.is_zero()) return;
    const std::string key = render_poly(p.normalized());
    if (!seen_.insert(key).second) return;
    out_.push_back({family_, std::move(indices), std::move(p)});
  }
  std::vector<MinorRelation> take() { return std::move(out_); }

 private:
  Family family_;
  std::set<std::string> seen_;
  std::vector<MinorRelation> out_;
};

RelationFamilies build_families(const SymVarIndex& idx) {
  const unsigned n = idx.size();
  const unsigned s = idx.s;
  auto in_tail = [s](unsigned a) { return a > s; };
  auto Y = [&idx](unsigned i, unsigned j, unsigned l, unsigned m) { return minor2(idx, i, j, l, m); };
  RelationFamilies out;

  Collector e(Family::E);
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (unsigned l = 1; l <= n; ++l)
        for (unsigned m = 1; m <= n; ++m) {
          if (l == m) continue;
          bool ok = true;
          for (unsigned a : {i, j})
            if ((a == l || a == m) && !in_tail(a)) ok = false;
          if (ok) e.add({i, j, l, m}, Y(i, j, l, m));
        }
    }
  out.e = e.take();

  Collector f(Family::F);
  for (unsigned i = 1; i <= s; ++i)
    for (unsigned j = 1; j <= s; ++j) {
      if (i == j) continue;
      for (unsigned l = 1; l <= n; ++l)
        for (unsigned m = 1; m <= n; ++m) {
          if (l == m && !in_tail(l)) continue;
          if (i == l || i == m || j == l || j == m) continue;
          f.add({i, j, l, m}, Y(i, l, i, m) - Y(j, l, j, m));
        }
    }
  out.f = f.take();

  Collector g(Family::G);
  for (unsigned i = 1; i <= s; ++i)
    for (unsigned j = 1; j <= s; ++j)
      for (unsigned l = 1; l <= s; ++l)
        for (unsigned m = 1; m <= s; ++m) {
          if (i == j || i == l || i == m || j == l || j == m || l == m) continue;
          g.add({i, j, l, m}, Y(i, j, i, j) - Y(j, l, j, l) + Y(l, m, l, m) - Y(m, i, m, i));
        }
  out.g = g.take();

  Collector h1(Family::H1), h2(Family::H2);
  for (unsigned i = 1; i <= s; ++i)
    for (unsigned j = 1; j <= s; ++j)
      for (unsigned l = 1; l <= s; ++l) {
        if (i == j || i == l || j == l) continue;
        h1.add({i, j, l}, h1_relation(idx, i, j, l));
        h2.add({i, j, l}, h2_relation(idx, i, j, l));
      }
  out.h1 = h1.take();
  out.h2 = h2.take();
  return out;
}

}  // namespace

SymVarIndex::SymVarIndex(unsigned k_, unsigned s_) : k(k_), s(s_) {
  require(k >= 1, ErrorCode::InvalidArgument, "k must be at least 1");
  require(s >= 2 && s <= k + 1, ErrorCode::InvalidArgument, "s must satisfy 2 <= s <= k+1");
  require(k <= 30, ErrorCode::Unsupported, "matrix size too large");
}

unsigned SymVarIndex::var(unsigned i, unsigned j) const {
  const unsigned n = size();
  require(i >= 1 && j >= 1 && i <= n && j <= n, ErrorCode::InvalidArgument,
          "matrix index out of range");
  if (i > j) std::swap(i, j);
  // Rows 1..i-1 of the upper triangle hold n, n-1, ... entries.
  return (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i);
}

MPoly SymVarIndex::y(unsigned i, unsigned j) const { return MPoly::variable(nvars(), var(i, j)); }

std::string SymVarIndex::name(unsigned index) const {
  const unsigned n = size();
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i; j <= n; ++j)
      if (var(i, j) == index) return "y" + std::to_string(i) + std::to_string(j);
  fail(ErrorCode::InvalidArgument, "variable index out of range");
}

MPoly minor2(const SymVarIndex& idx, unsigned i, unsigned j, unsigned l, unsigned m) {
  require(i != j && l != m, ErrorCode::InvalidArgument, "minor needs distinct rows and columns");
  return idx.y(i, l) * idx.y(j, m) - idx.y(i, m) * idx.y(j, l);
}

Rational minor2(const QMatrix& a, unsigned i, unsigned j, unsigned l, unsigned m) {
  require(i != j && l != m, ErrorCode::InvalidArgument, "minor needs distinct rows and columns");
  const unsigned n = static_cast<unsigned>(a.rows());
  require(i >= 1 && j >= 1 && l >= 1 && m >= 1 && i <= n && j <= n && l <= n && m <= n,
          ErrorCode::InvalidArgument, "matrix index out of range");
  return a(i - 1, l - 1) * a(j - 1, m - 1) - a(i - 1, m - 1) * a(j - 1, l - 1);
}

std::string to_string(Family f) {
  switch (f) {
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::H1: return "H1";
    case Family::H2: return "H2";
  }
  return "?";
}

MPoly h1_relation(const SymVarIndex& idx, unsigned i, unsigned j, unsigned l) {
  return idx.y(i, l) * (minor2(idx, i, j, i, j) - minor2(idx, i, l, i, l)) -
         (idx.y(l, l) - idx.y(j, j)) * minor2(idx, i, j, j, l);
}

MPoly h2_relation(const SymVarIndex& idx, unsigned i, unsigned j, unsigned l) {
  return (idx.y(i, i) - idx.y(j, j)) * minor2(idx, i, j, i, j) +
         (idx.y(j, j) - idx.y(l, l)) * minor2(idx, j, l, j, l) +
         (idx.y(l, l) - idx.y(i, i)) * minor2(idx, l, i, l, i);
}

MPoly h1_reduction(const SymVarIndex& idx, unsigned i, unsigned j, unsigned l, unsigned m) {
  auto Y = [&idx](unsigned a, unsigned b, unsigned c, unsigned d) { return minor2(idx, a, b, c, d); };
  auto y = [&idx](unsigned a, unsigned b) { return idx.y(a, b); };
  const MPoly two = MPoly::constant(idx.nvars(), Cyc(2L));
  return -(two * y(j, m) * Y(i, j, l, m)) - y(j, m) * Y(i, m, j, l) -
         y(i, l) * (Y(i, l, i, l) - Y(l, j, l, j) + Y(j, m, j, m) - Y(m, i, m, i)) +
         y(i, m) * (Y(j, l, j, m) - Y(i, l, i, m)) + y(i, j) * (Y(i, j, i, l) - Y(m, j, m, l)) +
         (y(i, i) - y(j, j)) * (Y(i, j, l, j) - Y(i, m, l, m)) - y(j, l) * (Y(i, l, j, l) - Y(i, m, j, m));
}

MPoly h2_reduction(const SymVarIndex& idx, unsigned i, unsigned j, unsigned l, unsigned m) {
  auto Y = [&idx](unsigned a, unsigned b, unsigned c, unsigned d) { return minor2(idx, a, b, c, d); };
  auto y = [&idx](unsigned a, unsigned b) { return idx.y(a, b); };
  return (y(i, i) - y(j, j)) * (Y(i, j, i, j) - Y(j, l, j, l) + Y(l, m, l, m) - Y(m, i, m, i)) +
         (y(l, l) - y(i, i)) * (Y(i, l, i, l) - Y(l, j, l, j) + Y(j, m, j, m) - Y(m, i, m, i)) +
         y(l, m) * (Y(i, l, i, m) - Y(j, l, j, m)) - y(j, m) * (Y(i, j, i, m) - Y(l, j, l, m)) +
         y(i, m) * (Y(j, i, j, m) - Y(l, i, l, m));
}

RelationFamilies gens_families(const SymVarIndex& idx) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, RelationFamilies> cache;
  const std::pair<unsigned, unsigned> key{idx.k, idx.s};
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  RelationFamilies built = build_families(idx);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(built)).first->second;
}

RelationBases bases_BEFG(const SymVarIndex& idx) {
  const unsigned n = idx.size();
  const unsigned s = idx.s;
  auto in_tail = [s](unsigned a) { return a > s; };
  auto Y = [&idx](unsigned i, unsigned j, unsigned l, unsigned m) { return minor2(idx, i, j, l, m); };
  RelationBases out;

  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j)
      for (unsigned l = i; l <= j; ++l)
        for (unsigned m = l + 1; m <= n; ++m) {
          bool ok = true;
          for (unsigned a : {i, j})
            if ((a == l || a == m) && !in_tail(a)) ok = false;
          if (i == l && j > m) ok = false;
          if (ok) out.b_e.push_back({Family::E, {i, j, l, m}, Y(i, j, l, m)});
        }

  for (unsigned i = 2; i <= s; ++i)
    for (unsigned l = 2; l <= n; ++l)
      for (unsigned m = l; m <= n; ++m) {
        if (i == l || i == m) continue;
        if (l == m && !in_tail(l)) continue;
        out.b_f.push_back({Family::F, {i, 1, l, m}, Y(i, l, i, m) - Y(1, l, 1, m)});
      }
  for (unsigned i = 3; i <= s; ++i)
    for (unsigned m = 3; m <= n; ++m) {
      if (i == m) continue;
      out.b_f.push_back({Family::F, {i, 2, 1, m}, Y(i, 1, i, m) - Y(2, 1, 2, m)});
    }
  for (unsigned i = 4; i <= s; ++i) out.b_f.push_back({Family::F, {i, 3, 1, 2}, Y(i, 1, i, 2) - Y(3, 1, 3, 2)});

  for (unsigned m = 3; m + 1 <= s; ++m) {
    std::vector<unsigned> ls;
    for (unsigned l = 3; l < m; ++l) ls.push_back(l);
    ls.push_back(s);
    for (unsigned l : ls)
      out.b_g.push_back({Family::G, {1, 2, l, m}, Y(1, 2, 1, 2) - Y(2, l, 2, l) + Y(l, m, l, m) - Y(m, 1, m, 1)});
  }
  for (unsigned m = 3; m + 1 <= s; ++m)
    out.b_g.push_back({Family::G, {1, s, 2, m}, Y(1, s, 1, s) - Y(s, 2, s, 2) + Y(2, m, 2, m) - Y(m, 1, m, 1)});
  return out;
}

BasisCounts basis_count_formulas(const SymVarIndex& idx) {
  const long k = idx.k, s = idx.s;
  BasisCounts c;
  c.b_e = 2 * binom(k + 1, 4) + (k - s + 1) * binom(k, 2) + binom(k - s + 1, 2);
  c.b_f = (s - 1) * (binom(k - 1, 2) + (k - s + 1)) + (s - 2) * (k - 2) + (s >= 3 ? s - 3 : 0);
  c.b_g = s >= 3 ? binom(s, 2) - s : Integer(0);
  return c;
}

ExpectedCounts expected_counts(const SymVarIndex& idx) {
  const long k = idx.k;
  ExpectedCounts c;
  c.quadrics = Integer((k + 3) * (k + 2) * (k + 1) * (k - 2)) / 12;
  if (idx.s == 2) c.quadrics += 2;
  c.cubics = idx.s == 3 ? 7 : 0;
  return c;
}

bool eig_degenerate_test(const QMatrix& a) {
  require(a.rows() == a.cols(), ErrorCode::DimensionMismatch, "matrix must be square");
  const unsigned n = static_cast<unsigned>(a.rows());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      require(a(i, j) == a(j, i), ErrorCode::InvalidArgument, "matrix must be symmetric");
  if (n <= 2) fail(ErrorCode::UnsupportedSize, "eigenspace test needs size at least 3");
  if (n == 3) {
    const SymVarIndex idx(2, 3);
    std::vector<Cyc> point(idx.nvars());
    for (unsigned i = 1; i <= 3; ++i)
      for (unsigned j = i; j <= 3; ++j) point[idx.var(i, j)] = Cyc(a(i - 1, j - 1));
    const RelationFamilies fam = gens_families(idx);
    for (const auto* list : {&fam.e, &fam.f, &fam.h1, &fam.h2})
      for (const auto& rel : *list)
        if (!evaluate(rel.expansion, point).is_zero()) return false;
    return true;
  }
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j)
      for (unsigned k = 1; k <= n; ++k)
        for (unsigned l = 1; l <= n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          if (sgn(minor2(a, i, j, k, l)) != 0) return false;
          if (minor2(a, i, k, i, l) != minor2(a, j, k, j, l)) return false;
          if (minor2(a, i, k, i, k) - minor2(a, i, l, i, l) != minor2(a, j, k, j, k) - minor2(a, j, l, j, l))
            return false;
        }
  return true;
}

QMatrix cayley_degenerate_sample(unsigned size, const Rational& lambda, const Rational& mu,
                                 std::uint64_t seed) {
  require(size >= 2, ErrorCode::InvalidArgument, "size must be at least 2");
  const QMatrix q = cayley_orthogonal(size, seed);
  QMatrix d(size, size);
  for (unsigned i = 0; i < size; ++i) d(i, i) = i + 1 == size ? mu : lambda;
  return q * d * q.transposed();
}

QMatrix veronese_eigen_witness(const Rational& x, const Rational& y, const Rational& z) {
  require(sgn(x) != 0 || sgn(y) != 0 || sgn(z) != 0, ErrorCode::InvalidArgument,
          "witness needs a nonzero point");
  const Rational v[3] = {x, y, z};
  const Rational norm = x * x + y * y + z * z;
  QMatrix a(3, 3);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) a(i, j) = 12 * v[i] * v[j] - (i == j ? Rational(4 * norm) : Rational(0));
  return a;
}

}  // namespace cwp
