#include "cwpower/fixtures.hpp"

namespace cwp::fixtures {

const char* const kSteinerQuartic =
    "x0^4 - 4*x0^3*x1 + 6*x0^2*x1^2 - 4*x0*x1^3 + x1^4 - 4*x0^3*x2 + 4*x0^2*x1*x2 + "
    "4*x0*x1^2*x2 - 4*x1^3*x2 + 6*x0^2*x2^2 + 4*x0*x1*x2^2 + 6*x1^2*x2^2 - 4*x0*x2^3 - "
    "4*x1*x2^3 + x2^4 - 4*x0^3*x3 + 4*x0^2*x1*x3 + 4*x0*x1^2*x3 - 4*x1^3*x3 + "
    "4*x0^2*x2*x3 - 40*x0*x1*x2*x3 + 4*x1^2*x2*x3 + 4*x0*x2^2*x3 + 4*x1*x2^2*x3 - "
    "4*x2^3*x3 + 6*x0^2*x3^2 + 4*x0*x1*x3^2 + 6*x1^2*x3^2 + 4*x0*x2*x3^2 + 4*x1*x2*x3^2 + "
    "6*x2^2*x3^2 - 4*x0*x3^3 - 4*x1*x3^3 - 4*x2*x3^3 + x3^4";

const std::vector<std::string> kDegreeSO = {"1", "2", "8", "40", "384", "4768", "111616", "3433600"};
const std::vector<std::string> kDegreeSOSquared = {"1",      "1",        "4",        "40",
                                                   "1536",   "152576",   "57147392", "56256102400"};

namespace {

LinearForms rational_rows(const std::vector<std::vector<long>>& rows) {
  CycMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Cyc(rows[i][j]);
  return LinearForms(m);
}

}  // namespace

std::vector<PlaneFixture> plane_cases() {
  const Cyc i = Cyc::zeta(4);
  CycMatrix conic(5, 3);
  const std::vector<std::vector<Cyc>> on_conic = {
      {1L, i, 0L}, {1L, -i, 0L}, {1L, 0L, i}, {1L, 0L, -i}, {0L, 1L, i}};
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 3; ++c) conic(r, c) = on_conic[r][c];

  std::vector<PlaneFixture> out;
  out.push_back({"six-general-points", PlaneCase::I,
                 rational_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {1, 3, -2}}),
                 {{2, 6}}});
  out.push_back({"five-points-on-smooth-conic", PlaneCase::IIa, LinearForms(conic), {{3, 7}}});
  out.push_back({"five-points-on-line-pair", PlaneCase::IIb,
                 rational_rows({{1, 0, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 0}, {0, 1, 1}}),
                 {{2, 2}}});
  out.push_back({"three-points-repeated", PlaneCase::IIIa,
                 rational_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {0, 3, 0}}),
                 {{1, 2}}});
  out.push_back({"four-general-points", PlaneCase::IIIb,
                 rational_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}), {{4, 1}}});
  out.push_back({"three-collinear-plus-one", PlaneCase::IIIc,
                 rational_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}}), {{2, 1}}});
  return out;
}

std::pair<LinearForms, LinearForms> uniform_matroid_planes() {
  LinearForms general = rational_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {1, 3, -2}});
  // Points (1 : t : t^2) and (0 : 0 : 1) on the conic x0*x2 = x1^2.
  LinearForms on_conic = rational_rows({{1, 0, 0}, {1, 1, 1}, {1, -1, 1}, {1, 2, 4}, {1, -2, 4}, {0, 0, 1}});
  return {general, on_conic};
}

}  // namespace cwp::fixtures
