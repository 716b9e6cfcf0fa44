#include <random>

#include "cwpower/power_basis.hpp"
#include "cwpower/power_map.hpp"
#include "cwpower/veronese.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace cwp;

namespace {

MPoly P(const char* text, unsigned nvars) { return parse_poly(text, nvars); }

std::vector<MPoly> polys(std::initializer_list<const char*> texts, unsigned nvars) {
  std::vector<MPoly> out;
  for (const char* t : texts) out.push_back(P(t, nvars));
  return out;
}

std::vector<Cyc> phi(const std::vector<Cyc>& p, unsigned r) {
  std::vector<Cyc> out;
  for (const auto& c : p) out.push_back(pow(c, r));
  return out;
}

bool proportional_points(const std::vector<Cyc>& a, const std::vector<Cyc>& b) {
  CycMatrix m(2, a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    m(0, j) = a[j];
    m(1, j) = b[j];
  }
  return rank(m) == 1;
}

// Random small-integer combination of the spanning vectors.
std::vector<Cyc> sample_point(const Subspace& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-7, 7);
  const CycMatrix b = s.basis();
  for (;;) {
    std::vector<Cyc> p(s.nvars());
    for (std::size_t a = 0; a < b.rows(); ++a) {
      const Cyc c(coef(rng));
      for (std::size_t j = 0; j < p.size(); ++j) p[j] += c * b(a, j);
    }
    if (std::any_of(p.begin(), p.end(), [](const Cyc& c) { return !c.is_zero(); })) return p;
  }
}

// Does tau p lie on X = V(generators) for some tau?
bool in_some_translate(const std::vector<MPoly>& generators, const std::vector<Cyc>& p, unsigned r) {
  bool found = false;
  for_each_group_element(r, static_cast<unsigned>(p.size()), [&](const GroupElement& tau) {
    if (found) return;
    std::vector<Cyc> q(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) q[j] = p[j] * Cyc::zeta(r, tau.expo()[j]);
    found = std::all_of(generators.begin(), generators.end(), [&q](const MPoly& g) { return evaluate(g, q).is_zero(); });
  });
  return found;
}

// Number of G-orbits among the components.
std::size_t orbit_count(const SubspaceSet& comps, unsigned r) {
  std::vector<bool> seen(comps.size(), false);
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (seen[i]) continue;
    ++orbits;
    for_each_group_element(r, comps[i].nvars(), [&](const GroupElement& tau) {
      CycMatrix eq = comps[i].equations();
      for (std::size_t a = 0; a < eq.rows(); ++a)
        for (std::size_t j = 0; j < eq.cols(); ++j) eq(a, j) *= Cyc::zeta(r, tau.expo()[j]);
      const Subspace moved = Subspace::from_equations(eq);
      for (std::size_t k = 0; k < comps.size(); ++k)
        if (comps[k] == moved) seen[k] = true;
    });
  }
  return orbits;
}

const std::vector<MPoly> kLine17 = polys({"x0+x1+x2+x3", "x1+2*x2+3*x3"}, 4);
const MPoly kQuadric17 = P("3*x0^2-x1^2+x2^2-3*x3^2", 4);

const std::vector<MPoly> kX18 = polys({"x0+x1+x2+x3+x4", "x1+2*x2+3*x3+4*x4"}, 5);
const std::vector<MPoly> kCircuits18 =
    polys({"x1+2*x2+3*x3+4*x4", "x0-x2-2*x3-3*x4", "2*x0+x1-x3-2*x4", "3*x0+2*x1+x2-x4", "4*x0+3*x1+2*x2+x3"}, 5);

}  // namespace

TEST_CASE("subspaces are canonical") {
  const auto a = Subspace::from_forms(polys({"x0+x1", "x1-x2"}, 3));
  const auto b = Subspace::from_forms(polys({"2*x0+x1+x2", "3*x1-3*x2"}, 3));
  CHECK(a == b);
  CHECK(a.dim() == 0);
  CHECK(Subspace::compare(a, b) == 0);
  CHECK(Subspace::whole(3).dim() == 2);
  CHECK(Subspace::whole(3).contains(a));
  CHECK_FALSE(a.contains(Subspace::whole(3)));
  CHECK(a.intersect({Cyc(1L), Cyc(0L), Cyc(0L)}).empty());
  CHECK(Subspace::span(a.basis()) == a);
  CHECK(a.contains_point({Cyc(1L), Cyc(-1L), Cyc(-1L)}));
  CHECK_THROWS_AS(linear_coefficients(P("x0^2", 3)), Error);
}

TEST_CASE("pullback of a point on the projective line") {
  const auto comps = pullback_decomposition({P("x0+x1", 2)}, 2);
  REQUIRE(comps.size() == 2);
  for (const auto& s : comps) {
    CHECK(s.dim() == 0);
    const auto p = s.basis().row(0);
    CHECK(evaluate(P("x0^2-x1^2", 2), p).is_zero());
  }
  CHECK_FALSE(comps[0] == comps[1]);
  CHECK(pullback_decomposition({P("x0+x1", 2)}, 5).size() == 5);
}

TEST_CASE("pullbacks of two lines in the plane are finite") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coef(1, 9);
  for (unsigned r : {2U, 3U}) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<MPoly> forms;
      for (int i = 0; i < 2; ++i) {
        MPoly f(3);
        for (unsigned j = 0; j < 3; ++j) f.add_term(Monomial::variable(3, j), Cyc(coef(rng) * (j == 1 ? -1 : 1)));
        forms.push_back(f);
      }
      CycMatrix m;
      for (const auto& f : forms) m.append_row(linear_coefficients(f));
      if (rank(m) < 2) continue;
      const auto comps = pullback_decomposition(forms, r);
      // Bezout: r^2 image points, each with at most r^2 preimages.
      CHECK(comps.size() <= r * r * r * r);
      for (const auto& s : comps) CHECK(s.dim() == 0);
      for (const auto& s : comps)
        for (const auto& f : forms)
          CHECK(evaluate(coordinate_power_hypersurface(f, r), phi(s.basis().row(0), r)).is_zero());
    }
  }
}

TEST_CASE("transversal circuit pullback reaches the Bezout count") {
  // The two image curves of degree r meet in r^2 points off the coordinate
  // lines, each with r^2 preimages.
  const auto forms = polys({"x0-2*x1+3*x2", "x0+x1-5*x2"}, 3);
  for (unsigned r : {2U, 3U, 4U}) {
    const auto comps = pullback_decomposition(forms, r);
    CHECK(comps.size() == r * r * r * r);
    for (const auto& s : comps) CHECK(s.dim() == 0);
  }
}

TEST_CASE("codimension-two line in P3 with two linear forms") {
  const auto verdict = is_power_basis_linear(kLine17, kLine17, 2);
  CHECK_FALSE(verdict.is_power_basis);
  REQUIRE(!verdict.witnesses.empty());
  for (const auto& s : verdict.witnesses) CHECK(s.dim() == 1);
  // Four rational quadratic curves, one of which is the image of X.
  const auto all = pullback_decomposition(kLine17, 2);
  for (const auto& s : all) CHECK(s.dim() == 1);
  CHECK(orbit_count(all, 2) == 4);
  CHECK(orbit_count(verdict.witnesses, 2) == 3);
  SubspaceSet good;
  for (const auto& s : all)
    if (std::find(verdict.witnesses.begin(), verdict.witnesses.end(), s) == verdict.witnesses.end()) good.push_back(s);
  CHECK(orbit_count(good, 2) == 1);
  CHECK(std::find(good.begin(), good.end(), Subspace::from_forms(kLine17)) != good.end());
  REQUIRE(verdict.witness_point);
  REQUIRE(verdict.witness_image);
  CHECK_FALSE(in_some_translate(kLine17, *verdict.witness_point, 2));
  CHECK(*verdict.witness_image == phi(*verdict.witness_point, 2));
  for (const auto& f : kLine17) CHECK(evaluate(coordinate_power_hypersurface(f, 2), *verdict.witness_image).is_zero());
  const auto linear = linear_part(LinearForms(Subspace::from_forms(kLine17).basis().transposed()), 2);
  REQUIRE(linear.size() == 1);
  CHECK(proportional(linear[0], P("3*x0-x1+x2-3*x3", 4)));
  CHECK_FALSE(evaluate(linear[0], *verdict.witness_image).is_zero());
}

TEST_CASE("codimension-two line in P3 completed by a quadric") {
  CHECK(proportional(coordinate_power_hypersurface(kQuadric17, 2), P("3*x0-x1+x2-3*x3", 4)));
  auto candidates = kLine17;
  candidates.push_back(kQuadric17);
  const auto verdict = is_power_basis_mixed(kLine17, candidates, 2);
  CHECK(verdict.is_power_basis);
  CHECK(verdict.witnesses.empty());
  CHECK_FALSE(is_power_basis_mixed(kLine17, kLine17, 2).is_power_basis);

  // Sampling: on every bad line of the linear pair, the quadric's image cuts
  // out only points that land on X after a sign change.
  std::mt19937_64 rng(3);
  const auto bad = is_power_basis_linear(kLine17, kLine17, 2).witnesses;
  const MPoly image = coordinate_power_hypersurface(kQuadric17, 2);
  for (const auto& s : bad)
    for (int i = 0; i < 20; ++i) {
      const auto p = sample_point(s, rng);
      if (evaluate(image, phi(p, 2)).is_zero()) CHECK(in_some_translate(kLine17, p, 2));
    }
}

TEST_CASE("circuit forms of a plane in P4 fail") {
  const auto verdict = is_power_basis_linear(kX18, kCircuits18, 2);
  CHECK_FALSE(verdict.is_power_basis);
  const std::vector<Cyc> expected{Cyc(16L), Cyc(16L), Cyc(1L), Cyc(36L), Cyc(9L)};
  bool found = false;
  for (const auto& s : verdict.witnesses) {
    if (s.dim() == 0 && proportional_points(phi(s.basis().row(0), 2), expected)) found = true;
  }
  CHECK(found);
  for (const auto& f : kCircuits18) CHECK(evaluate(coordinate_power_hypersurface(f, 2), expected).is_zero());
  const std::vector<Cyc> preimage{Cyc(4L), Cyc(4L), Cyc(1L), Cyc(6L), Cyc(3L)};
  CHECK(phi(preimage, 2) == expected);
  // Every preimage of the point is a sign change of this one.
  CHECK_FALSE(in_some_translate(kX18, preimage, 2));
}

TEST_CASE("witness components are sound") {
  std::mt19937_64 rng(11);
  for (const auto& [gens, cands, r] :
       std::vector<std::tuple<std::vector<MPoly>, std::vector<MPoly>, unsigned>>{
           {kLine17, kLine17, 2U}, {kX18, kCircuits18, 2U}, {kLine17, kLine17, 3U}}) {
    const auto verdict = is_power_basis_linear(gens, cands, r);
    std::vector<MPoly> images;
    for (const auto& f : cands) images.push_back(coordinate_power_hypersurface(f, r));
    for (const auto& s : verdict.witnesses) {
      CHECK_FALSE((s.dim() == 0 && in_some_translate(gens, s.basis().row(0), r)));
      for (int i = 0; i < 20; ++i) {
        const auto p = sample_point(s, rng);
        for (const auto& g : images) CHECK(evaluate(g, phi(p, r)).is_zero());
      }
    }
  }
}

TEST_CASE("constructed power bases") {
  const auto single = construct_power_basis({P("x0+2*x1-x2", 3)}, 3);
  REQUIRE(single.size() == 1);
  CHECK(is_power_basis_linear({P("x0+2*x1-x2", 3)}, single, 3).is_power_basis);

  const auto made = construct_power_basis(kLine17, 2);
  CHECK(made.size() == 9);
  const auto verdict = is_power_basis_linear(kLine17, made, 2);
  CHECK(verdict.is_power_basis);
  CHECK_FALSE(verdict.witness_point);

  const std::vector<MPoly> dependent{P("x0+x1", 3), P("2*x0+2*x1", 3)};
  CHECK_THROWS_AS(construct_power_basis(dependent, 2), Error);
  Budget tight;
  tight.columns = 5;
  CHECK_THROWS_AS(construct_power_basis(kLine17, 2, tight), Error);

  // A plane in P4 with the constructed forms.
  const auto made18 = construct_power_basis(kX18, 2);
  CHECK(made18.size() == 17);
  CHECK(is_power_basis_linear(kX18, made18, 2).is_power_basis);
}

TEST_CASE("verdicts are monotone and stable") {
  auto made = construct_power_basis(kLine17, 2);
  // Supersets of a power basis stay power bases.
  auto more = made;
  more.push_back(P("x0+x1+x2+x3", 4));
  more.push_back(P("2*x0+5*x1+8*x2+11*x3", 4));
  CHECK(is_power_basis_linear(kLine17, more, 2).is_power_basis);
  // Subsets of a failing set keep failing.
  CHECK_FALSE(is_power_basis_linear(kLine17, {kLine17[0]}, 2).is_power_basis);
  CHECK_FALSE(is_power_basis_linear(kX18, {kCircuits18[0], kCircuits18[2]}, 2).is_power_basis);

  // Rescaled and permuted candidates give the same decomposition.
  const auto base = is_power_basis_linear(kX18, kCircuits18, 2);
  std::vector<MPoly> shuffled;
  for (std::size_t i = kCircuits18.size(); i-- > 0;) shuffled.push_back(kCircuits18[i] * Cyc(Rational(static_cast<long>(i) + 2, 3)));
  const auto moved = is_power_basis_linear(kX18, shuffled, 2);
  CHECK(moved.is_power_basis == base.is_power_basis);
  CHECK(moved.witnesses == base.witnesses);

  // Generators given in another basis describe the same X.
  const auto regen = polys({"x0+2*x1+3*x2+4*x3+5*x4", "2*x0+x1+0*x2-x3-2*x4"}, 5);
  CHECK(is_power_basis_linear(regen, kCircuits18, 2).witnesses == base.witnesses);
}

TEST_CASE("mixed route agrees with the linear route on linear input") {
  for (unsigned r : {2U, 3U}) {
    const auto lin = is_power_basis_linear(kLine17, kLine17, r);
    const auto mix = is_power_basis_mixed(kLine17, kLine17, r);
    CHECK(lin.is_power_basis == mix.is_power_basis);
  }
  CHECK(is_power_basis_mixed(kX18, kCircuits18, 2).witnesses == is_power_basis_linear(kX18, kCircuits18, 2).witnesses);
  auto made = construct_power_basis(kLine17, 2);
  CHECK(is_power_basis_mixed(kLine17, made, 2).is_power_basis);
  CHECK_THROWS_AS(is_power_basis_mixed(kLine17, {P("x0^2", 4)}, 2), Error);
  CHECK_THROWS_AS(is_power_basis_linear(kLine17, {P("x0", 4)}, 2), Error);
}

TEST_CASE("budgets are enforced") {
  Budget tiny;
  tiny.group_elements = 10;
  CHECK_THROWS_AS(is_power_basis_linear(kX18, kCircuits18, 2, tiny), Error);
  Budget narrow;
  narrow.frontier = 2;
  CHECK_THROWS_AS(pullback_decomposition(kCircuits18, 2, narrow), Error);
}
