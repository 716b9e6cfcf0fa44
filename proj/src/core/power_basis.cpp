#include "cwpower/power_basis.hpp"

#include <algorithm>

namespace cwp {

namespace {

CycMatrix echelon_rows(CycMatrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j).demoted();
  CycMatrix out = row_basis(m);
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = out(i, j).demoted();
  return out;
}

bool is_zero_vector(const std::vector<Cyc>& v) {
  return std::all_of(v.begin(), v.end(), [](const Cyc& c) { return c.is_zero(); });
}

// Scaled so that the first nonzero entry is 1.
std::vector<Cyc> normalized_vector(std::vector<Cyc> v) {
  auto lead = std::find_if(v.begin(), v.end(), [](const Cyc& c) { return !c.is_zero(); });
  if (lead == v.end()) return v;
  const Cyc inv = lead->inverse();
  for (auto& c : v) c = (c * inv).demoted();
  return v;
}

bool vector_less(const std::vector<Cyc>& a, const std::vector<Cyc>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = Cyc::compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

// Distinct hyperplanes tau V(f), as normalized coefficient vectors.
std::vector<std::vector<Cyc>> orbit_vectors(const std::vector<Cyc>& coeffs, unsigned r) {
  std::vector<std::vector<Cyc>> out;
  for_each_group_element(r, static_cast<unsigned>(coeffs.size()), [&](const GroupElement& tau) {
    std::vector<Cyc> v(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      v[j] = coeffs[j];
      if (!coeffs[j].is_zero() && tau.expo()[j] != 0) v[j] *= Cyc::zeta(r, tau.expo()[j]);
    }
    out.push_back(normalized_vector(std::move(v)));
  });
  std::sort(out.begin(), out.end(), vector_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_group_budget(unsigned r, unsigned nvars, const Budget& budget) {
  unsigned long long size = 1;
  for (unsigned i = 1; i < nvars; ++i) {
    size *= r;
    if (size > budget.group_elements)
      fail(ErrorCode::BudgetExceeded, "group of order " + std::to_string(r) + "^" + std::to_string(nvars - 1) +
                                          " exceeds the enumeration budget of " +
                                          std::to_string(budget.group_elements));
  }
}

bool inside_some(const Subspace& s, const std::vector<Subspace>& targets) {
  return std::any_of(targets.begin(), targets.end(), [&s](const Subspace& t) { return t.contains(s); });
}

// Sorted, deduplicated, and without members contained in another member.
SubspaceSet maximal(SubspaceSet items) {
  std::sort(items.begin(), items.end(), [](const Subspace& a, const Subspace& b) { return Subspace::compare(a, b) < 0; });
  items.erase(std::unique(items.begin(), items.end()), items.end());
  SubspaceSet out;
  std::size_t higher = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (higher <= i) higher = i + 1;
    while (higher < items.size() && items[higher].dim() == items[i].dim()) ++higher;
    bool covered = false;
    for (std::size_t j = higher; j < items.size() && !covered; ++j) covered = items[j].contains(items[i]);
    if (!covered) out.push_back(items[i]);
  }
  return out;
}

bool lies_on(const Subspace& s, const std::vector<Cyc>& hyperplane) {
  const CycMatrix& b = s.basis();
  for (std::size_t v = 0; v < b.rows(); ++v) {
    Cyc acc;
    for (std::size_t j = 0; j < hyperplane.size(); ++j)
      if (!hyperplane[j].is_zero() && !b(v, j).is_zero()) acc += hyperplane[j] * b(v, j);
    if (!acc.is_zero()) return false;
  }
  return true;
}

void check_frontier(std::size_t size, const Budget& budget) {
  if (size > budget.frontier)
    fail(ErrorCode::BudgetExceeded, "pullback frontier exceeds " + std::to_string(budget.frontier) + " subspaces");
}

SubspaceSet refine(const SubspaceSet& current, const std::vector<std::vector<Cyc>>& hyperplanes,
                   const Budget& budget) {
  SubspaceSet next;
  for (const auto& s : current) {
    if (std::any_of(hyperplanes.begin(), hyperplanes.end(), [&s](const auto& h) { return lies_on(s, h); })) {
      next.push_back(s);
      continue;
    }
    for (const auto& h : hyperplanes) {
      if (s.dim() == 1) {
        // The line through a and b meets h at (h.b) a - (h.a) b.
        const CycMatrix& b = s.basis();
        Cyc ha, hb;
        for (std::size_t j = 0; j < h.size(); ++j) {
          ha += h[j] * b(0, j);
          hb += h[j] * b(1, j);
        }
        std::vector<Cyc> p(h.size());
        for (std::size_t j = 0; j < h.size(); ++j) p[j] = hb * b(0, j) - ha * b(1, j);
        next.push_back(Subspace::point(p));
        check_frontier(next.size() / 4, budget);
        continue;
      }
      Subspace t = s.intersect(h);
      if (t.empty()) continue;
      next.push_back(std::move(t));
      check_frontier(next.size() / 4, budget);
    }
  }
  // Points are only deduplicated here; containment in a larger member is
  // settled once at the end.
  auto split = std::partition(next.begin(), next.end(), [](const Subspace& t) { return t.dim() > 0; });
  SubspaceSet points(std::make_move_iterator(split), std::make_move_iterator(next.end()));
  next.erase(split, next.end());
  next = maximal(std::move(next));
  std::sort(points.begin(), points.end(), [](const Subspace& a, const Subspace& b) { return Subspace::compare(a, b) < 0; });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  next.insert(next.end(), std::make_move_iterator(points.begin()), std::make_move_iterator(points.end()));
  check_frontier(next.size(), budget);
  return next;
}

// Maximal components of the intersection of the unions of the hyperplane
// orbits, skipping those inside a target. Points are settled against all
// remaining orbits at once instead of being refined further.
SubspaceSet decompose(const std::vector<std::vector<std::vector<Cyc>>>& orbits, const std::vector<Subspace>& targets,
                      unsigned nvars, const Budget& budget) {
  auto keep = [&targets](const Subspace& s) { return !inside_some(s, targets); };
  SubspaceSet frontier{Subspace::whole(nvars)};
  SubspaceSet settled;
  if (!keep(frontier.front())) return {};
  for (std::size_t i = 0; i < orbits.size() && !frontier.empty(); ++i) {
    SubspaceSet next;
    for (auto& s : refine(frontier, orbits[i], budget)) {
      if (!keep(s)) continue;
      if (s.dim() > 0) {
        next.push_back(std::move(s));
        continue;
      }
      bool survives = true;
      for (std::size_t j = i + 1; j < orbits.size() && survives; ++j)
        survives = std::any_of(orbits[j].begin(), orbits[j].end(), [&s](const auto& h) { return lies_on(s, h); });
      if (survives) settled.push_back(std::move(s));
      check_frontier(settled.size(), budget);
    }
    frontier = std::move(next);
  }
  settled.insert(settled.end(), frontier.begin(), frontier.end());
  return maximal(std::move(settled));
}

std::vector<std::vector<std::vector<Cyc>>> form_orbits(const std::vector<MPoly>& forms, unsigned r) {
  std::vector<std::vector<std::vector<Cyc>>> out;
  for (const auto& f : forms) out.push_back(orbit_vectors(linear_coefficients(f), r));
  return out;
}

unsigned common_nvars(const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
  require(!a.empty(), ErrorCode::InvalidArgument, "at least one form is required");
  const unsigned nv = a.front().nvars();
  for (const auto* list : {&a, &b})
    for (const auto& f : *list) require(f.nvars() == nv, ErrorCode::DimensionMismatch, "forms have different variable counts");
  return nv;
}

std::vector<Subspace> translates(const Subspace& x, unsigned r) {
  std::vector<Subspace> out;
  for_each_group_element(r, x.nvars(), [&](const GroupElement& tau) {
    CycMatrix eq = x.equations();
    for (std::size_t i = 0; i < eq.rows(); ++i)
      for (std::size_t j = 0; j < eq.cols(); ++j)
        if (tau.expo()[j] != 0 && !eq(i, j).is_zero()) eq(i, j) *= Cyc::zeta(r, tau.expo()[j]);
    out.push_back(Subspace::from_equations(eq));
  });
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return Subspace::compare(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool point_inside_some(const std::vector<Cyc>& p, const std::vector<Subspace>& targets) {
  return std::any_of(targets.begin(), targets.end(), [&p](const Subspace& t) { return t.contains_point(p); });
}

// Point of s on none of the targets; moment-curve combinations of the basis
// leave every proper subspace after finitely many tries.
std::vector<Cyc> generic_point(const Subspace& s, const std::vector<Subspace>& targets) {
  const CycMatrix b = s.basis();
  for (long t = 0;; ++t) {
    std::vector<Cyc> p(s.nvars());
    Cyc weight(1L);
    for (std::size_t a = 0; a < b.rows(); ++a) {
      for (std::size_t j = 0; j < p.size(); ++j) p[j] += weight * b(a, j);
      weight *= Cyc(t);
    }
    if (!is_zero_vector(p) && !point_inside_some(p, targets)) return normalized_vector(std::move(p));
    require(t < 100000, ErrorCode::Internal, "no generic point found");
  }
}

std::vector<Cyc> phi(const std::vector<Cyc>& p, unsigned r) {
  std::vector<Cyc> out;
  for (const auto& c : p) out.push_back(pow(c, r));
  return out;
}

void check_in_span(const std::vector<MPoly>& generators, const MPoly& f) {
  CycMatrix g;
  for (const auto& x : generators) g.append_row(linear_coefficients(x));
  const std::size_t base = rank(g);
  g.append_row(linear_coefficients(f));
  require(rank(g) == base, ErrorCode::InvalidArgument, "candidate " + render_poly(f) + " is not in the span of the generators");
}

// Univariate polynomials over Q(zeta), coefficients by ascending degree.
using UPoly = std::vector<Cyc>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly remainder(UPoly a, const UPoly& b) {
  const Cyc lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const Cyc q = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Cyc evaluate(const UPoly& p, const Cyc& x) {
  Cyc v;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

// Divides by (s - root).
UPoly deflate(const UPoly& p, const Cyc& root) {
  UPoly q(p.size() - 1);
  Cyc carry;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * root;
    q[i - 1] = carry;
  }
  return q;
}

struct BinaryForm {
  unsigned t_multiplicity = 0;  // multiplicity of the root [1 : 0]
  UPoly affine;                 // h(s, 1)
};

BinaryForm split(const MPoly& h) {
  BinaryForm out;
  const unsigned d = h.degree();
  unsigned top = 0;
  out.affine.assign(d + 1, Cyc());
  for (const auto& [m, c] : h.terms()) {
    out.affine[m[0]] = c;
    top = std::max(top, m[0]);
  }
  trim(out.affine);
  out.t_multiplicity = d - top;
  return out;
}

// Do the common zeros on the line span(a, b) of all orbit products lie in
// the targets?
bool line_survivors_covered(const CycMatrix& line, const std::vector<std::vector<MPoly>>& orbits,
                            const std::vector<Subspace>& targets) {
  const unsigned nv = static_cast<unsigned>(line.cols());
  std::vector<MPoly> param;
  for (unsigned j = 0; j < nv; ++j) {
    MPoly x(2);
    x.add_term(Monomial({1, 0}), line(0, j));
    x.add_term(Monomial({0, 1}), line(1, j));
    param.push_back(x);
  }
  bool constrained = false;
  unsigned t_mult = ~0U;
  UPoly common;
  for (const auto& orb : orbits) {
    MPoly q = MPoly::constant(2, Cyc(1L));
    bool vanishes = false;
    for (const auto& g : orb) {
      const MPoly piece = compose(g, param);
      if (piece.is_zero()) {
        vanishes = true;
        break;
      }
      q = q * piece;
    }
    if (vanishes) continue;
    const BinaryForm bf = split(q);
    t_mult = constrained ? std::min(t_mult, bf.t_multiplicity) : bf.t_multiplicity;
    common = constrained ? gcd(common, bf.affine) : bf.affine;
    constrained = true;
  }
  if (!constrained) return false;
  // Points of the line on some tau X, as [s : t].
  bool infinity_covered = false;
  std::vector<Cyc> roots;
  for (const auto& target : targets) {
    CycMatrix sys(target.equations().rows(), 2);
    for (std::size_t i = 0; i < sys.rows(); ++i)
      for (unsigned c = 0; c < 2; ++c)
        for (unsigned j = 0; j < nv; ++j) sys(i, c) += target.equations()(i, j) * line(c, j);
    const auto ker = kernel(sys);
    if (ker.size() != 1) continue;
    if (ker[0][1].is_zero()) {
      infinity_covered = true;
    } else {
      roots.push_back(ker[0][0] * ker[0][1].inverse());
    }
  }
  if (t_mult > 0 && !infinity_covered) return false;
  for (const auto& root : roots)
    while (common.size() > 1 && evaluate(common, root).is_zero()) common = deflate(common, root);
  return common.size() <= 1;
}

}  // namespace

void Subspace::set_equations(CycMatrix reduced) {
  nvars_ = static_cast<unsigned>(reduced.cols());
  eq_ = std::move(reduced);
  basis_ = CycMatrix(0, nvars_);
  for (const auto& v : kernel(eq_)) basis_.append_row(v);
}

Subspace Subspace::whole(unsigned nvars) {
  Subspace s;
  s.set_equations(CycMatrix(0, nvars));
  return s;
}

Subspace Subspace::from_equations(CycMatrix equations) {
  Subspace s;
  s.set_equations(echelon_rows(std::move(equations)));
  return s;
}

Subspace Subspace::from_forms(const std::vector<MPoly>& forms) {
  require(!forms.empty(), ErrorCode::InvalidArgument, "at least one form is required");
  CycMatrix m;
  for (const auto& f : forms) m.append_row(linear_coefficients(f));
  return from_equations(m);
}

Subspace Subspace::point(const std::vector<Cyc>& p) {
  std::size_t c = p.size();
  while (c > 0 && p[c - 1].is_zero()) --c;
  require(c > 0, ErrorCode::InvalidArgument, "the zero vector is not a point");
  --c;
  const Cyc inv = p[c].inverse();
  CycMatrix eq(p.size() - 1, p.size());
  CycMatrix basis(1, p.size());
  for (std::size_t j = 0, row = 0; j < p.size(); ++j) {
    basis(0, j) = (p[j] * inv).demoted();
    if (j == c) continue;
    eq(row, j) = Cyc(1L);
    eq(row, c) = -basis(0, j);
    ++row;
  }
  Subspace s;
  s.nvars_ = static_cast<unsigned>(p.size());
  s.eq_ = std::move(eq);
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::span(const CycMatrix& vectors) {
  CycMatrix m(0, vectors.cols());
  for (const auto& e : kernel(vectors)) m.append_row(e);
  return from_equations(m);
}

Subspace Subspace::intersect(const std::vector<Cyc>& equation) const {
  require(equation.size() == nvars_, ErrorCode::DimensionMismatch, "equation length mismatch");
  CycMatrix m = eq_;
  m.append_row(equation);
  return from_equations(std::move(m));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.empty()) return true;
  if (other.dim() < 0 || dim() < other.dim()) return other.empty();
  const CycMatrix& b = other.basis();
  for (std::size_t i = 0; i < eq_.rows(); ++i)
    for (std::size_t v = 0; v < b.rows(); ++v) {
      Cyc acc;
      for (std::size_t j = 0; j < nvars_; ++j)
        if (!eq_(i, j).is_zero() && !b(v, j).is_zero()) acc += eq_(i, j) * b(v, j);
      if (!acc.is_zero()) return false;
    }
  return true;
}

bool Subspace::contains_point(const std::vector<Cyc>& point) const {
  require(point.size() == nvars_, ErrorCode::DimensionMismatch, "point length mismatch");
  for (std::size_t i = 0; i < eq_.rows(); ++i) {
    Cyc acc;
    for (std::size_t j = 0; j < nvars_; ++j)
      if (!eq_(i, j).is_zero() && !point[j].is_zero()) acc += eq_(i, j) * point[j];
    if (!acc.is_zero()) return false;
  }
  return true;
}

int Subspace::compare(const Subspace& a, const Subspace& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_ ? -1 : 1;
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  for (std::size_t i = 0; i < a.eq_.rows(); ++i)
    for (std::size_t j = 0; j < a.eq_.cols(); ++j) {
      const int c = Cyc::compare(a.eq_(i, j), b.eq_(i, j));
      if (c != 0) return c;
    }
  return 0;
}

std::vector<Cyc> linear_coefficients(const MPoly& f) {
  require(!f.is_zero() && f.is_homogeneous() && f.degree() == 1, ErrorCode::InvalidArgument,
          "expected a nonzero linear form, got " + render_poly(f));
  std::vector<Cyc> v(f.nvars());
  for (const auto& [m, c] : f.terms())
    for (unsigned j = 0; j < f.nvars(); ++j)
      if (m[j] == 1) v[j] = c;
  return v;
}

SubspaceSet pullback_decomposition(const std::vector<MPoly>& forms, unsigned r, const Budget& budget) {
  require(r >= 1, ErrorCode::InvalidArgument, "power must be positive");
  const unsigned nv = common_nvars(forms, {});
  check_group_budget(r, nv, budget);
  return decompose(form_orbits(forms, r), {}, nv, budget);
}

PowerBasisVerdict is_power_basis_linear(const std::vector<MPoly>& generators,
                                        const std::vector<MPoly>& candidates, unsigned r,
                                        const Budget& budget) {
  require(r >= 1, ErrorCode::InvalidArgument, "power must be positive");
  require(!candidates.empty(), ErrorCode::InvalidArgument, "at least one candidate is required");
  const unsigned nv = common_nvars(generators, candidates);
  check_group_budget(r, nv, budget);
  for (const auto& f : candidates) check_in_span(generators, f);
  const auto targets = translates(Subspace::from_forms(generators), r);
  PowerBasisVerdict out;
  out.witnesses = decompose(form_orbits(candidates, r), targets, nv, budget);
  out.is_power_basis = out.witnesses.empty();
  if (!out.is_power_basis) {
    out.witness_point = generic_point(out.witnesses.front(), targets);
    out.witness_image = phi(*out.witness_point, r);
  }
  return out;
}

PowerBasisVerdict is_power_basis_mixed(const std::vector<MPoly>& generators,
                                       const std::vector<MPoly>& candidates, unsigned r,
                                       const Budget& budget) {
  require(r >= 1, ErrorCode::InvalidArgument, "power must be positive");
  require(!candidates.empty(), ErrorCode::InvalidArgument, "at least one candidate is required");
  const unsigned nv = common_nvars(generators, candidates);
  check_group_budget(r, nv, budget);
  const Subspace x = Subspace::from_forms(generators);
  const CycMatrix xb = x.basis();
  std::vector<MPoly> param;
  for (unsigned j = 0; j < nv; ++j) {
    MPoly c(static_cast<unsigned>(xb.rows()));
    for (unsigned a = 0; a < xb.rows(); ++a) c.add_term(Monomial::variable(static_cast<unsigned>(xb.rows()), a), xb(a, j));
    param.push_back(c);
  }
  std::vector<MPoly> linear;
  std::vector<std::vector<MPoly>> orbits;
  for (const auto& f : candidates) {
    require(!f.is_zero() && f.is_homogeneous(), ErrorCode::InvalidArgument, "candidates must be nonzero forms");
    if (f.degree() == 1) {
      check_in_span(generators, f);
      linear.push_back(f);
    } else {
      require(xb.rows() == 0 || compose(f, param).is_zero(), ErrorCode::InvalidArgument,
              "candidate " + render_poly(f) + " does not vanish on X");
      orbits.push_back(orbit(f, r));
    }
  }
  const auto targets = translates(x, r);
  const SubspaceSet bad = decompose(form_orbits(linear, r), targets, nv, budget);
  PowerBasisVerdict out;
  for (const auto& s : bad) {
    if (s.dim() == 0) {
      const auto p = s.basis().row(0);
      const bool survives = std::all_of(orbits.begin(), orbits.end(), [&p](const std::vector<MPoly>& orb) {
        return std::any_of(orb.begin(), orb.end(), [&p](const MPoly& g) { return evaluate(g, p).is_zero(); });
      });
      if (survives) out.witnesses.push_back(s);
    } else if (s.dim() == 1) {
      if (!line_survivors_covered(s.basis(), orbits, targets)) out.witnesses.push_back(s);
    } else {
      fail(ErrorCode::Unsupported, "a bad component of dimension " + std::to_string(s.dim()) +
                                       " is beyond the exact mixed route; add linear candidates");
    }
  }
  out.is_power_basis = out.witnesses.empty();
  if (!out.is_power_basis && out.witnesses.front().dim() == 0) {
    out.witness_point = normalized_vector(out.witnesses.front().basis().row(0));
    out.witness_image = phi(*out.witness_point, r);
  }
  return out;
}

std::vector<MPoly> construct_power_basis(const std::vector<MPoly>& generators, unsigned r, const Budget& budget) {
  require(r >= 1, ErrorCode::InvalidArgument, "power must be positive");
  const unsigned nv = common_nvars(generators, {});
  CycMatrix g;
  for (const auto& f : generators) g.append_row(linear_coefficients(f));
  require(rank(g) == generators.size(), ErrorCode::RankDeficient, "generators are linearly dependent");
  const unsigned long long k = generators.size();
  unsigned long long group = 1;
  for (unsigned i = 1; i < nv; ++i) {
    group *= r;
    require(group <= budget.group_elements, ErrorCode::BudgetExceeded, "group too large for the construction");
  }
  const unsigned long long m = (k - 1) * group + 1;
  require(m <= budget.columns, ErrorCode::BudgetExceeded,
          std::to_string(m) + " combinations exceed the budget of " + std::to_string(budget.columns));
  std::vector<MPoly> out;
  for (unsigned long long node = 1; node <= m; ++node) {
    MPoly f(nv);
    Integer weight = 1;
    for (const auto& gen : generators) {
      f += gen * Cyc(weight);
      weight *= static_cast<unsigned long>(node);
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace cwp
