#include "cwpower/veronese.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

namespace cwp {

namespace {

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

void check_monomial_budget(unsigned nvars, unsigned d, const Budget& budget, const char* what) {
  const Integer count = binomial(nvars - 1 + d, d);
  if (count > Integer(static_cast<unsigned long>(budget.columns)))
    fail(ErrorCode::BudgetExceeded, std::string(what) + ": " + count.get_str() +
                                        " monomials exceed the column budget of " +
                                        std::to_string(budget.columns));
}

std::map<Monomial, std::size_t> index_of(const std::vector<Monomial>& monos) {
  std::map<Monomial, std::size_t> out;
  for (std::size_t i = 0; i < monos.size(); ++i) out.emplace(monos[i], i);
  return out;
}

MPoly form_from_vector(const std::vector<Monomial>& monos, const std::vector<Cyc>& v, unsigned nvars) {
  MPoly f(nvars);
  for (std::size_t j = 0; j < monos.size(); ++j) f.add_term(monos[j], v[j]);
  return f.normalized().demoted();
}

// Coefficient matrix of polys (one column each) in the given monomial basis.
CycMatrix coefficient_columns(const std::vector<MPoly>& polys, const std::map<Monomial, std::size_t>& idx) {
  CycMatrix m(idx.size(), polys.size());
  for (std::size_t c = 0; c < polys.size(); ++c)
    for (const auto& [mono, coeff] : polys[c].terms()) m(idx.at(mono), c) = coeff;
  return m;
}

bool all_rational(const CycMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_rational()) return false;
  return true;
}

QMatrix to_rational(const CycMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j).rational();
  return q;
}

// Kernel and rank with a rational fast path.
std::vector<std::vector<Cyc>> exact_kernel(const CycMatrix& m) {
  if (!all_rational(m)) return kernel(m);
  std::vector<std::vector<Cyc>> out;
  for (const auto& v : kernel(to_rational(m))) out.emplace_back(v.begin(), v.end());
  return out;
}

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t out = 1;
  for (; e; e >>= 1, a = mul_mod(a, a))
    if (e & 1) out = mul_mod(out, a);
  return out;
}

std::optional<std::uint64_t> reduce_mod(const Rational& q) {
  const Integer p(static_cast<unsigned long>(kPrime));
  Integer num = q.get_num() % p, den = q.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) return std::nullopt;
  const std::uint64_t n = static_cast<std::uint64_t>(Integer(num).get_ui());
  const std::uint64_t d = static_cast<std::uint64_t>(Integer(den).get_ui());
  return mul_mod(n, pow_mod(d, kPrime - 2));
}

// Rank modulo 2^61 - 1, a lower bound for the rank over Q; nullopt when a
// denominator vanishes.
std::optional<std::size_t> modular_rank(const QMatrix& m) {
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto v = reduce_mod(m(i, j));
      if (!v) return std::nullopt;
      a[i][j] = *v;
    }
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    const std::uint64_t inv = pow_mod(a[r][c], kPrime - 2);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = mul_mod(a[i][c], inv);
      for (std::size_t j = c; j < m.cols(); ++j)
        a[i][j] = (a[i][j] + kPrime - mul_mod(f, a[r][j])) % kPrime;
    }
    ++r;
  }
  return r;
}

// Exact rank when it is known not to exceed upper.
std::size_t bounded_rank(const CycMatrix& m, std::size_t upper) {
  if (!all_rational(m)) return rank(m);
  const QMatrix q = to_rational(m);
  if (const auto lower = modular_rank(q); lower && *lower == upper) return upper;
  return rank(q);
}

bool collinear(const std::vector<Cyc>& a, const std::vector<Cyc>& b, const std::vector<Cyc>& c) {
  CycMatrix m(3, 3);
  for (unsigned j = 0; j < 3; ++j) {
    m(0, j) = a[j];
    m(1, j) = b[j];
    m(2, j) = c[j];
  }
  return determinant(m).is_zero();
}

}  // namespace

LinearForms::LinearForms(CycMatrix rows) : rows_(std::move(rows)) {
  require(rows_.rows() >= 1 && rows_.cols() >= 1, ErrorCode::InvalidArgument, "empty embedding matrix");
  require(rank(rows_) == rows_.cols(), ErrorCode::RankDeficient,
          "embedding matrix must have full column rank");
}

LinearForms::LinearForms(const LinearSpaceEmbedding& l) {
  const QMatrix& b = l.matrix();
  rows_ = CycMatrix(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) rows_(i, j) = Cyc(b(i, j));
}

MPoly LinearForms::form(std::size_t i) const {
  const unsigned nv = k() + 1;
  MPoly f(nv);
  for (unsigned j = 0; j < nv; ++j) f.add_term(Monomial::variable(nv, j), rows_(i, j));
  return f;
}

PointConfig::PointConfig(const std::vector<std::vector<Cyc>>& points) {
  require(!points.empty(), ErrorCode::InvalidArgument, "point configuration is empty");
  const std::size_t dim = points.front().size();
  require(dim >= 1, ErrorCode::InvalidArgument, "points need at least one coordinate");
  k_ = static_cast<unsigned>(dim - 1);
  for (const auto& p : points) {
    require(p.size() == dim, ErrorCode::DimensionMismatch, "points have different lengths");
    auto lead = std::find_if(p.begin(), p.end(), [](const Cyc& x) { return !x.is_zero(); });
    if (lead == p.end()) continue;
    const Cyc inv = lead->inverse();
    std::vector<Cyc> q;
    q.reserve(dim);
    for (const auto& x : p) q.push_back((x * inv).demoted());
    if (std::find(points_.begin(), points_.end(), q) == points_.end()) points_.push_back(std::move(q));
  }
  CycMatrix m(points_.size(), dim);
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = points_[i][j];
  require(rank(m) == dim, ErrorCode::RankDeficient, "points do not span the projective space");
}

PointConfig PointConfig::from_forms(const LinearForms& l) {
  std::vector<std::vector<Cyc>> pts;
  for (std::size_t i = 0; i < l.rows().rows(); ++i) pts.push_back(l.rows().row(i));
  return PointConfig(pts);
}

std::vector<Monomial> monomials_of_degree(unsigned nvars, unsigned d) {
  std::vector<Monomial> out;
  if (nvars == 0) return out;
  std::vector<unsigned> e(nvars, 0);
  // Enumerates compositions of d; sorted afterwards.
  auto rec = [&](auto&& self, unsigned pos, unsigned left) -> void {
    if (pos + 1 == nvars) {
      e[pos] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      e[pos] = a;
      self(self, pos + 1, left - a);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MPoly> vanishing_forms_on_config(const PointConfig& z, unsigned d) {
  require(d >= 1, ErrorCode::InvalidArgument, "degree must be positive");
  const unsigned nv = z.k() + 1;
  const auto monos = monomials_of_degree(nv, d);
  CycMatrix eval(z.size(), monos.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const auto& p = z.points()[i];
    for (std::size_t j = 0; j < monos.size(); ++j) {
      Cyc v(1L);
      for (unsigned t = 0; t < nv && !v.is_zero(); ++t)
        if (monos[j][t] > 0) v *= pow(p[t], monos[j][t]);
      eval(i, j) = v;
    }
  }
  std::vector<MPoly> out;
  for (const auto& v : exact_kernel(eval)) out.push_back(form_from_vector(monos, v, nv));
  return out;
}

std::vector<MPoly> vanishing_forms_on_power(const LinearForms& l, unsigned r, unsigned d,
                                            const Budget& budget) {
  require(r >= 1, ErrorCode::InvalidArgument, "power must be positive");
  require(d >= 1, ErrorCode::InvalidArgument, "degree must be positive");
  const unsigned nx = l.n() + 1;
  const unsigned nw = l.k() + 1;
  check_monomial_budget(nw, d * r, budget, "target graded piece");
  check_monomial_budget(nx, d, budget, "source graded piece");

  std::vector<MPoly> powers;
  for (unsigned i = 0; i < nx; ++i) powers.push_back(pow(l.form(i), r));

  // image(m) = image(m / x_i) * l_i^r, with i the first variable of m.
  std::map<Monomial, MPoly> images{{Monomial::one(nx), MPoly::constant(nw, Cyc(1L))}};
  for (unsigned deg = 1; deg <= d; ++deg) {
    std::map<Monomial, MPoly> next;
    for (const auto& m : monomials_of_degree(nx, deg)) {
      unsigned i = 0;
      while (m[i] == 0) ++i;
      std::vector<unsigned> e = m.exponents();
      --e[i];
      next.emplace(m, images.at(Monomial(std::move(e))) * powers[i]);
    }
    images = std::move(next);
  }

  const auto target = monomials_of_degree(nw, d * r);
  const auto source = monomials_of_degree(nx, d);
  std::vector<MPoly> cols;
  cols.reserve(source.size());
  for (const auto& m : source) cols.push_back(images.at(m));
  std::vector<MPoly> out;
  for (const auto& v : exact_kernel(coefficient_columns(cols, index_of(target))))
    out.push_back(form_from_vector(source, v, nx));
  return out;
}

std::vector<MPoly> linear_part(const LinearForms& l, unsigned r, const Budget& budget) {
  return vanishing_forms_on_power(l, r, 1, budget);
}

std::map<unsigned, std::size_t> GeneratorProfile::nonzero() const {
  std::map<unsigned, std::size_t> out;
  for (unsigned d = 1; d < counts.size(); ++d)
    if (counts[d] != 0) out.emplace(d, counts[d]);
  return out;
}

GeneratorProfile minimal_generator_profile(const LinearForms& l, unsigned r, unsigned dmax,
                                           const Budget& budget) {
  require(dmax >= 1, ErrorCode::InvalidArgument, "dmax must be positive");
  const unsigned nx = l.n() + 1;
  GeneratorProfile profile;
  profile.dmax = dmax;
  profile.counts.assign(dmax + 1, 0);
  std::vector<MPoly> lower;
  for (unsigned d = 1; d <= dmax; ++d) {
    const auto piece = vanishing_forms_on_power(l, r, d, budget);
    std::size_t generated = 0;
    if (!lower.empty()) {
      std::vector<MPoly> products;
      for (const auto& g : lower)
        for (unsigned j = 0; j < nx; ++j) products.push_back(g * MPoly::variable(nx, j));
      // The products lie in I_d, so dim I_d bounds their rank.
      generated = bounded_rank(coefficient_columns(products, index_of(monomials_of_degree(nx, d))),
                               piece.size());
    }
    profile.counts[d] = piece.size() - generated;
    lower = piece;
  }
  return profile;
}

std::string to_string(LineKind kind) { return kind == LineKind::Line ? "line" : "smooth-conic"; }

std::string to_string(PlaneCase c) {
  switch (c) {
    case PlaneCase::I: return "i";
    case PlaneCase::IIa: return "ii-a";
    case PlaneCase::IIb: return "ii-b";
    case PlaneCase::IIIa: return "iii-a";
    case PlaneCase::IIIb: return "iii-b";
    case PlaneCase::IIIc: return "iii-c";
  }
  return "?";
}

LineKind classify_line(const LinearForms& l) {
  require(l.k() == 1, ErrorCode::InvalidArgument, "classify_line needs a line (k = 1)");
  return PointConfig::from_forms(l).size() == 2 ? LineKind::Line : LineKind::SmoothConic;
}

PlaneClassification classify_plane(const LinearForms& l) {
  require(l.k() == 2, ErrorCode::InvalidArgument, "classify_plane needs a plane (k = 2)");
  const PointConfig z = PointConfig::from_forms(l);
  const auto conics = vanishing_forms_on_config(z, 2);
  PlaneClassification out{PlaneCase::I, z.size(), conics.size()};
  if (conics.empty()) return out;
  if (conics.size() == 1) {
    CycMatrix q(3, 3);
    for (const auto& [m, c] : conics.front().terms()) {
      std::vector<unsigned> idx;
      for (unsigned j = 0; j < 3; ++j)
        for (unsigned e = 0; e < m[j]; ++e) idx.push_back(j);
      if (idx[0] == idx[1]) {
        q(idx[0], idx[0]) = c;
      } else {
        q(idx[0], idx[1]) = c * Cyc(Rational(1, 2));
        q(idx[1], idx[0]) = q(idx[0], idx[1]);
      }
    }
    out.conic_rank = rank(q);
    if (out.conic_rank == 3) {
      out.label = PlaneCase::IIa;
    } else if (out.conic_rank == 2) {
      out.label = PlaneCase::IIb;
    } else {
      fail(ErrorCode::InternalClassificationError,
           "unique conic has rank " + std::to_string(out.conic_rank) + " although Z spans the plane");
    }
    return out;
  }
  const auto& p = z.points();
  if (z.size() == 3) {
    out.label = PlaneCase::IIIa;
    return out;
  }
  bool any_three_collinear = false;
  for (std::size_t a = 0; a < p.size() && !any_three_collinear; ++a)
    for (std::size_t b = a + 1; b < p.size() && !any_three_collinear; ++b)
      for (std::size_t c = b + 1; c < p.size() && !any_three_collinear; ++c)
        any_three_collinear = collinear(p[a], p[b], p[c]);
  if (z.size() == 4 && !any_three_collinear) {
    out.label = PlaneCase::IIIb;
    return out;
  }
  for (std::size_t skip = 0; skip < p.size(); ++skip) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (i != skip) rest.push_back(i);
    bool on_line = true;
    for (std::size_t t = 2; t < rest.size() && on_line; ++t)
      on_line = collinear(p[rest[0]], p[rest[1]], p[rest[t]]);
    if (on_line) {
      out.label = PlaneCase::IIIc;
      return out;
    }
  }
  fail(ErrorCode::InternalClassificationError,
       "configuration of " + std::to_string(z.size()) + " points on " + std::to_string(conics.size()) +
           " independent conics matches no case");
}

}  // namespace cwp
