#pragma once

#include <map>
#include <string>
#include <vector>

#include "cwpower/veronese.hpp"

namespace cwp::fixtures {

// The quartic V(x0+x1+x2+x3)^(o2) with its 35 printed coefficients.
extern const char* const kSteinerQuartic;

// Printed degrees of SO(m) and SO(m)^(o2) for m = 1..8.
extern const std::vector<std::string> kDegreeSO;
extern const std::vector<std::string> kDegreeSOSquared;

struct PlaneFixture {
  std::string name;
  PlaneCase expected;
  LinearForms forms;
  // Minimal generator counts by degree, zero entries omitted.
  std::map<unsigned, std::size_t> profile;
};

// One configuration per case of the plane classification, ambient n as in
// the statement of each case.
std::vector<PlaneFixture> plane_cases();

// Two planes in P^5 with the uniform matroid U(3,6), classified i and ii-a.
std::pair<LinearForms, LinearForms> uniform_matroid_planes();

}  // namespace cwp::fixtures
