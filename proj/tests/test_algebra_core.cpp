#include <numeric>
#include <random>

#include "cwpower/cyclotomic.hpp"
#include "cwpower/error.hpp"
#include "cwpower/mpoly.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace cwp;

namespace {

MPoly P(const char* text, unsigned nvars, unsigned r = 1) { return parse_poly(text, nvars, r); }

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b));
}

}  // namespace

TEST_CASE("cyclotomic polynomials vanish at primitive roots") {
  const double pi = std::acos(-1.0);
  for (unsigned m : {1U, 2U, 3U, 4U, 5U, 6U, 8U, 12U, 15U, 30U, 105U, 210U, 360U}) {
    const auto& phi = cyclotomic_polynomial(m);
    CHECK(phi.size() - 1 == euler_phi(m));
    for (unsigned k = 1; k <= m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      std::complex<double> x = std::polar(1.0, 2 * pi * k / m), value = 0, power = 1;
      for (long c : phi) {
        value += static_cast<double>(c) * power;
        power *= x;
      }
      CHECK(std::abs(value) < 1e-6);
    }
  }
  // The first cyclotomic polynomial with a coefficient outside {-1, 0, 1}.
  const auto& phi105 = cyclotomic_polynomial(105);
  CHECK(*std::min_element(phi105.begin(), phi105.end()) == -2);
  CHECK_THROWS_AS(cyclotomic_polynomial(361), Error);
}

TEST_CASE("roots of unity satisfy zeta^r = 1") {
  for (unsigned r = 1; r <= 12; ++r) {
    CHECK(pow(Cyc::zeta(r), r).is_one());
    if (r > 1) CHECK_FALSE(pow(Cyc::zeta(r), r - 1).is_one());
  }
  CHECK(Cyc::zeta(2) == Cyc(-1L));
  CHECK(Cyc::zeta(4, 2) == Cyc(-1L));
  CHECK(Cyc::zeta(6, 2) == Cyc::zeta(3));
  CHECK(Cyc::zeta(4, -1) == Cyc::zeta(4, 3));
}

TEST_CASE("cyclotomic field axioms on random elements") {
  std::mt19937_64 rng(20240611);
  for (unsigned r : {2U, 3U, 4U, 5U, 6U}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const Cyc a = oracle::random_cyc(rng, r);
      const Cyc b = oracle::random_cyc(rng, r);
      const Cyc c = oracle::random_cyc(rng, r);
      if (!a.is_zero()) REQUIRE((a * a.inverse()).is_one());
      REQUIRE((a + b) * c == a * c + b * c);
      REQUIRE(a * b == b * a);
      REQUIRE(close(oracle::to_complex(a * b), oracle::to_complex(a) * oracle::to_complex(b)));
    }
  }
}

TEST_CASE("mixed orders combine in the compositum") {
  const Cyc s = Cyc::zeta(4) + Cyc::zeta(3);
  CHECK(s.order() == 12);
  CHECK(close(oracle::to_complex(s), oracle::to_complex(Cyc::zeta(4)) + oracle::to_complex(Cyc::zeta(3))));
  CHECK((s - Cyc::zeta(3)) == Cyc::zeta(4));
  CHECK((Cyc::zeta(3) + Cyc::zeta(3, 2)) == Cyc(-1L));
  CHECK((Cyc::zeta(3) + Cyc::zeta(3, 2)).is_rational());
}

TEST_CASE("act rescales coordinates") {
  const MPoly f = P("x0 + x1 + x2 + x3", 4);
  CHECK(act(GroupElement(2, {0, 1, 0, 0}), f) == P("x0 - x1 + x2 + x3", 4));
  CHECK(act(GroupElement::identity(3, 4), f) == f);
  const MPoly g = P("x0^2 + x1*x2", 3);
  CHECK(act(GroupElement(2, {0, 1, 1}), g) == g);
  CHECK_THROWS_AS(act(GroupElement(2, {0, 1}), f), Error);
  // Representatives differing by a global shift coincide.
  CHECK(GroupElement(3, {1, 2, 0}) == GroupElement(3, {0, 1, 2}));
}

TEST_CASE("group law and orbit size divide r^n") {
  std::mt19937_64 rng(7);
  for (unsigned r : {2U, 3U, 4U}) {
    for (int trial = 0; trial < 20; ++trial) {
      const unsigned nv = 3;
      const MPoly f = oracle::random_poly(rng, nv, 2, 1, 3);
      if (f.is_zero()) continue;
      std::uniform_int_distribution<unsigned> e(0, r - 1);
      GroupElement s(r, {e(rng), e(rng), e(rng)}), t(r, {e(rng), e(rng), e(rng)});
      CHECK(act(s, act(t, f)) == act(s * t, f));
      const std::size_t size = orbit(f, r).size();
      CHECK((r * r) % size == 0);
    }
  }
}

TEST_CASE("proportional returns the exact scalar") {
  auto l = proportional(P("2*x0 + 2*x1", 2), P("x0 + x1", 2));
  REQUIRE(l.has_value());
  CHECK(*l == Cyc(2L));
  CHECK_FALSE(proportional(P("x0 + x1", 2), P("x0 - x1", 2)).has_value());
  auto z = proportional(P("z*x0^2 + z*x1^2", 2, 4), P("x0^2 + x1^2", 2));
  REQUIRE(z.has_value());
  CHECK(*z == Cyc::zeta(4));
  CHECK_THROWS_AS(proportional(MPoly(2), P("x0", 2)), Error);
}

TEST_CASE("orbit sizes") {
  const auto hyperplane = orbit(P("x0 + x1 + x2 + x3", 4), 2);
  CHECK(hyperplane.size() == 8);
  CHECK(hyperplane.front() == P("x0 + x1 + x2 + x3", 4));
  CHECK(orbit(P("x0^2 + x1^2", 2), 2).size() == 1);
  // Circle (x1 - a x0)^2 + (x2 - b x0)^2 - (c x0)^2 with a = 1, b = 2, c = 3.
  const MPoly circle = P("(x1 - x0)^2 + (x2 - 2*x0)^2 - 9*x0^2", 3);
  CHECK(orbit(circle, 2).size() == 4);
  // Representatives are pairwise non-proportional.
  for (std::size_t i = 0; i < hyperplane.size(); ++i)
    for (std::size_t j = i + 1; j < hyperplane.size(); ++j)
      CHECK_FALSE(proportional(hyperplane[i], hyperplane[j]).has_value());
}

TEST_CASE("substitute and extract powers") {
  CHECK(substitute_power(P("x0 + x1", 2), 2) == P("x0^2 + x1^2", 2));
  CHECK(substitute_power(P("x0*x1", 2), 3) == P("x0^3*x1^3", 2));
  CHECK(extract_power(P("x0^2 - 2*x1^2", 2), 2) == P("x0 - 2*x1", 2));
  try {
    extract_power(P("x0*x1", 2), 2);
    FAIL("expected NotInPowerSubring");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInPowerSubring);
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const MPoly f = oracle::random_poly(rng, 4, 3, 4, 5);
    for (unsigned s : {1U, 2U, 3U}) {
      CHECK(extract_power(substitute_power(f, s), s) == f);
    }
  }
}

TEST_CASE("evaluate is linear and multiplicative") {
  CHECK(evaluate(P("x0 + x1", 2), {Cyc(1L), Cyc(-1L)}).is_zero());
  CHECK(evaluate(P("x0^2", 1), {Cyc(3L)}) == Cyc(9L));
  CHECK_THROWS_AS(evaluate(P("x0", 2), {Cyc(1L)}), Error);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const MPoly f = oracle::random_poly(rng, 3, 2, 3, 4);
    const MPoly g = oracle::random_poly(rng, 3, 2, 3, 4);
    const auto p = oracle::random_point(rng, 3, 3);
    CHECK(evaluate(f * g, p) == evaluate(f, p) * evaluate(g, p));
    CHECK(evaluate(f + g, p) == evaluate(f, p) + evaluate(g, p));
    CHECK(close(oracle::to_complex(evaluate(f, p)),
                oracle::to_complex(evaluate(f, p).promoted(3))));
  }
}

TEST_CASE("newton support lists exponent vectors") {
  const auto s = newton_support(P("x0 + x1", 2));
  CHECK(s == std::set<std::vector<unsigned>>{{1, 0}, {0, 1}});
  CHECK(newton_support(P("x0^2", 3)) == std::set<std::vector<unsigned>>{{2, 0, 0}});
}

TEST_CASE("parser examples") {
  const MPoly f = P("x0^2 - 2*x1*x2", 3);
  CHECK(f.size() == 2);
  CHECK(f.coefficient(Monomial({0, 1, 1})) == Cyc(-2L));
  const MPoly g = P("3/4*x0 + z*x1", 2, 4);
  CHECK(g.coefficient(Monomial({0, 1})) == Cyc::zeta(4));
  CHECK(g.coefficient(Monomial({1, 0})) == Cyc(Rational(3, 4)));
  CHECK(render_poly(f) == "x0^2 - 2*x1*x2");
  CHECK(render_poly(g) == "3/4*x0 + z*x1");
  CHECK(render_poly(P("x1 + x0", 2)) == "x0 + x1");
  CHECK(render_poly(P("(1 + 2*z)*x0 - z^2*x1", 2, 5)) == "(1 + 2*z)*x0 - z^2*x1");
  CHECK(render_poly(P("x0 - x0", 2)) == "0");
}

TEST_CASE("parser errors carry positions") {
  try {
    P("x0 + + x1", 2);
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(P("x2", 2), ParseError);
  CHECK_THROWS_AS(P("z*x0", 2, 1), ParseError);
  CHECK_THROWS_AS(P("x0 +", 2), ParseError);
  CHECK_THROWS_AS(P("1/0*x0", 2), ParseError);
  CHECK_THROWS_AS(P("(x0 + x1", 2), ParseError);
}

TEST_CASE("parser round trip on random canonical polynomials") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<unsigned> pick_r(1, 6), pick_deg(0, 4), pick_terms(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned r = pick_r(rng);
    const MPoly f = oracle::random_poly(rng, 4, pick_deg(rng), r, pick_terms(rng));
    const std::string text = render_poly(f);
    const MPoly back = parse_poly(text, 4, f.r_context());
    REQUIRE_MESSAGE(back == f, text);
    REQUIRE(render_poly(back) == text);
  }
}
