#include <string>
#include <vector>

#include "cwpower/cwpower.h"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Poly {
  cwp_poly* p = nullptr;
  Poly(const char* text, unsigned nvars, unsigned r = 1) { REQUIRE(cwp_poly_parse(text, nvars, r, &p) == CWP_OK); }
  ~Poly() { cwp_poly_free(p); }
  Poly(const Poly&) = delete;
  Poly& operator=(const Poly&) = delete;
};

std::string take(char* s) {
  std::string out = s ? s : "";
  cwp_string_free(s);
  return out;
}

std::string render(const cwp_poly* p) {
  char* s = nullptr;
  REQUIRE(cwp_poly_render(p, &s) == CWP_OK);
  return take(s);
}

nlohmann::json parse(char* s) { return nlohmann::json::parse(take(s)); }

}  // namespace

TEST_CASE("parse, render and compare through the C interface") {
  Poly f("x1 + x0", 2);
  CHECK(render(f.p) == "x0 + x1");
  CHECK(cwp_poly_nvars(f.p) == 2);
  unsigned deg = 0;
  CHECK(cwp_poly_degree(f.p, &deg) == CWP_OK);
  CHECK(deg == 1);
  Poly g("x0+x1", 2);
  int eq = 0;
  CHECK(cwp_poly_equal(f.p, g.p, &eq) == CWP_OK);
  CHECK(eq == 1);
  Poly z("z*x0 - x1", 2, 4);
  Poly back(render(z.p).c_str(), 2, 4);
  CHECK(cwp_poly_equal(z.p, back.p, &eq) == CWP_OK);
  CHECK(eq == 1);
}

TEST_CASE("errors carry a status, message and position") {
  cwp_poly* p = nullptr;
  CHECK(cwp_poly_parse("x0 + * x1", 2, 1, &p) == CWP_PARSE_ERROR);
  CHECK(p == nullptr);
  CHECK(cwp_last_error_position() == 5);
  CHECK(std::string(cwp_last_error()).size() > 0);
  CHECK(std::string(cwp_status_name(CWP_PARSE_ERROR)) == "parse-error");
  CHECK(cwp_poly_parse("x5", 2, 1, &p) != CWP_OK);
  CHECK(cwp_poly_parse("x0", 2, 1, nullptr) == CWP_INVALID_ARGUMENT);

  Poly x0("x0", 2);
  const cwp_poly* factors[] = {x0.p};
  cwp_poly* out = nullptr;
  CHECK(cwp_reciprocal(factors, 1, &out) == CWP_COORDINATE_HYPERPLANE_COMPONENT);
  CHECK(out == nullptr);
  CHECK(cwp_last_error_position() == -1);

  char* s = nullptr;
  CHECK(cwp_dual_exponent("1", &s) == CWP_UNDEFINED_DUAL);
  CHECK(s == nullptr);
  CHECK(cwp_chain_exponent("1/2", 2, 1, nullptr) == CWP_INVALID_ARGUMENT);
}

TEST_CASE("power map and exponent calculus") {
  Poly f("x0+x1+x2+x3", 4);
  const cwp_poly* factors[] = {f.p};
  cwp_poly* image = nullptr;
  REQUIRE(cwp_power_hypersurface(factors, 1, 2, &image) == CWP_OK);
  cwp_poly* powsum = nullptr;
  REQUIRE(cwp_gen_powsum("1/2", 3, &powsum) == CWP_OK);
  int eq = 0;
  CHECK(cwp_poly_equal(image, powsum, &eq) == CWP_OK);
  CHECK(eq == 1);
  CHECK(render(image).find("- 40*x0*x1*x2*x3") != std::string::npos);
  cwp_poly_free(image);
  cwp_poly_free(powsum);

  char* s = nullptr;
  REQUIRE(cwp_dual_exponent("-1", &s) == CWP_OK);
  CHECK(take(s) == "1/2");
  REQUIRE(cwp_chain_exponent("1", 4, 1, &s) == CWP_OK);
  CHECK(take(s) == "1/5");
}

TEST_CASE("linear spaces and orthogonal groups") {
  char* s = nullptr;
  REQUIRE(cwp_ortho_degree(8, &s) == CWP_OK);
  CHECK(parse(s)["deg_SO_squared"] == "56256102400");

  // The plane x0 + x1 + x2 + x3 = 0 as the image of a 4 x 3 matrix.
  const char* entries[] = {"1", "0", "0", "0", "1", "0", "0", "0", "1", "-1", "-1", "-1"};
  cwp_matrix* b = nullptr;
  REQUIRE(cwp_matrix_new(4, 3, entries, 1, &b) == CWP_OK);
  REQUIRE(cwp_degree_linear_power(b, 2, &s) == CWP_OK);
  CHECK(parse(s)["degree"] == "4");
  cwp_budget budget;
  cwp_budget_default(&budget);
  REQUIRE(cwp_stab_fix_linear(b, 2, &budget, &s) == CWP_OK);
  const auto g = parse(s);
  CHECK(g["stab"] == "1");
  CHECK(g["fix"] == "1");
  budget.group_elements = 2;
  CHECK(cwp_stab_fix_linear(b, 2, &budget, &s) == CWP_BUDGET_EXCEEDED);
  cwp_matrix_free(b);

  CHECK(cwp_matrix_new(2, 2, entries, 1, nullptr) == CWP_INVALID_ARGUMENT);
}

TEST_CASE("eigenspace test verdicts") {
  const char* degenerate[] = {"5", "0", "0", "0", "5", "0", "0", "0", "9"};
  const char* generic[] = {"1", "0", "0", "0", "2", "0", "0", "0", "3"};
  int verdict = -1;
  cwp_matrix* a = nullptr;
  REQUIRE(cwp_matrix_new(3, 3, degenerate, 1, &a) == CWP_OK);
  CHECK(cwp_eig_test(a, &verdict) == CWP_OK);
  CHECK(verdict == 1);
  cwp_matrix_free(a);
  REQUIRE(cwp_matrix_new(3, 3, generic, 1, &a) == CWP_OK);
  CHECK(cwp_eig_test(a, &verdict) == CWP_OK);
  CHECK(verdict == 0);
  cwp_matrix_free(a);
}

TEST_CASE("power basis verdicts") {
  Poly f1("x0+x1+x2+x3", 4), f2("x1+2*x2+3*x3", 4), f3("3*x0^2-x1^2+x2^2-3*x3^2", 4);
  const cwp_poly* gens[] = {f1.p, f2.p};
  const cwp_poly* cands[] = {f1.p, f2.p, f3.p};
  int verdict = -1;
  char* s = nullptr;
  REQUIRE(cwp_power_basis_check(gens, 2, gens, 2, 2, nullptr, &verdict, &s) == CWP_OK);
  auto j = parse(s);
  CHECK(verdict == 0);
  CHECK(j["route"] == "linear");
  CHECK(j["is_power_basis"] == false);
  CHECK(j.contains("witness_point"));
  REQUIRE(cwp_power_basis_check(gens, 2, cands, 3, 2, nullptr, &verdict, &s) == CWP_OK);
  j = parse(s);
  CHECK(verdict == 1);
  CHECK(j["route"] == "mixed");

  REQUIRE(cwp_power_basis_make(gens, 2, 2, nullptr, &s) == CWP_OK);
  j = parse(s);
  const std::size_t count = j["forms"].size();
  CHECK(count == j["count"].get<std::size_t>());
  std::vector<Poly*> made;
  std::vector<const cwp_poly*> handles;
  for (const auto& text : j["forms"]) {
    made.push_back(new Poly(text.get<std::string>().c_str(), 4));
    handles.push_back(made.back()->p);
  }
  REQUIRE(cwp_power_basis_check(gens, 2, handles.data(), handles.size(), 2, nullptr, &verdict, &s) == CWP_OK);
  take(s);
  CHECK(verdict == 1);
  for (Poly* p : made) delete p;
}

TEST_CASE("reproduction fixtures through the C interface") {
  char* s = nullptr;
  REQUIRE(cwp_repro_names(&s) == CWP_OK);
  const auto names = parse(s);
  CHECK(names.size() == 6);
  int passed = 0;
  for (const auto& name : names) {
    REQUIRE(cwp_repro_run(name.get<std::string>().c_str(), &passed, &s) == CWP_OK);
    take(s);
    CHECK(passed == 1);
  }
  CHECK(cwp_repro_run("quartic", &passed, &s) == CWP_OK);
  take(s);
  CHECK(cwp_repro_run("no-such-fixture", &passed, &s) == CWP_INVALID_ARGUMENT);
}
