#include "cwpower/repro.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cwpower/fixtures.hpp"
#include "cwpower/matroid.hpp"
#include "cwpower/power_basis.hpp"
#include "cwpower/power_map.hpp"
#include "cwpower/veronese.hpp"

namespace cwp {

namespace {

using CheckList = std::vector<ReproCheck>;

void check(CheckList& out, std::string name, const std::function<bool(std::string&)>& body) {
  ReproCheck c{std::move(name), false, {}};
  try {
    c.passed = body(c.detail);
  } catch (const std::exception& e) {
    c.detail = e.what();
  }
  out.push_back(std::move(c));
}

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

std::string point_string(const std::vector<Cyc>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + p[i].to_string();
  return s + "]";
}

bool same_point(const std::vector<Cyc>& a, const std::vector<Cyc>& b) {
  CycMatrix m;
  m.append_row(a);
  m.append_row(b);
  return rank(m) == 1;
}

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

CheckList table1() {
  CheckList out;
  for (unsigned m = 1; m <= 8; ++m)
    check(out, "m=" + std::to_string(m), [m](std::string& detail) {
      const auto d = ortho_degree(m);
      detail = "deg SO=" + d.deg_so.get_str() + " deg SO^(o2)=" + d.deg_o_squared.get_str();
      return d.deg_so == Integer(fixtures::kDegreeSO[m - 1]) && d.deg_o_squared == Integer(fixtures::kDegreeSOSquared[m - 1]);
    });
  return out;
}

CheckList steiner_quartic() {
  CheckList out;
  const MPoly printed = P(fixtures::kSteinerQuartic, 4);
  check(out, "power image of x0+x1+x2+x3", [&](std::string& detail) {
    const MPoly q = coordinate_power_hypersurface(P("x0+x1+x2+x3", 4), 2);
    detail = std::to_string(q.size()) + " terms";
    return q == printed && q.size() == 35;
  });
  check(out, "coefficient of x0*x1*x2*x3", [&](std::string& detail) {
    const Cyc c = printed.coefficient(Monomial({1, 1, 1, 1}));
    detail = c.to_string();
    return c == Cyc(-40L);
  });
  check(out, "generalised power sum with p=1/2", [&](std::string&) { return gen_powsum(Rational(1, 2), 3) == printed; });
  return out;
}

MPoly circle(long a, long b, long c) {
  const MPoly x0 = MPoly::variable(3, 0), x1 = MPoly::variable(3, 1), x2 = MPoly::variable(3, 2);
  const MPoly u = x1 - Cyc(a) * x0, v = x2 - Cyc(b) * x0, w = Cyc(c) * x0;
  return u * u + v * v - w * w;
}

CheckList circle_cases() {
  CheckList out;
  const MPoly x0 = MPoly::variable(3, 0), x1 = MPoly::variable(3, 1), x2 = MPoly::variable(3, 2);
  check(out, "centre (0,0), radius 2: line", [&](std::string& detail) {
    const MPoly image = coordinate_power_hypersurface(circle(0, 0, 2), 2);
    detail = render_poly(image);
    return image.normalized() == (x1 + x2 - Cyc(4L) * x0).normalized();
  });
  check(out, "centre (0,1), radius 2: conic", [&](std::string& detail) {
    const MPoly image = coordinate_power_hypersurface(circle(0, 1, 2), 2);
    detail = render_poly(image);
    const long b = 1, c = 2, d = b * b - c * c, e = b * b + c * c;
    const MPoly printed = (x1 + x2) * (x1 + x2) + Cyc(2 * d) * (x0 * x1) - Cyc(2 * e) * (x0 * x2) + Cyc(d * d) * (x0 * x0);
    return image.normalized() == printed.normalized();
  });
  check(out, "centre (1,2), radius 3: quartic through 50 squared points", [&](std::string& detail) {
    const long a = 1, b = 2, c = 3;
    const MPoly image = coordinate_power_hypersurface(circle(a, b, c), 2);
    detail = "degree " + std::to_string(image.degree());
    for (int i = 0; i < 50; ++i) {
      const Rational t(i - 25, 7);
      const Rational den = 1 + t * t;
      const std::vector<Cyc> p{Cyc(1L), Cyc(Rational(a + c * (1 - t * t) / den)), Cyc(Rational(b + c * 2 * t / den))};
      if (!evaluate(image, phi(p, 2)).is_zero()) return false;
    }
    return image.degree() == 4;
  });
  return out;
}

CheckList codim2_line() {
  CheckList out;
  const auto line = polys({"x0+x1+x2+x3", "x1+2*x2+3*x3"}, 4);
  const MPoly quadric = P("3*x0^2-x1^2+x2^2-3*x3^2", 4);
  check(out, "{f1, f2} is not a power basis", [&](std::string& detail) {
    const auto v = is_power_basis_linear(line, line, 2);
    if (v.witness_image) detail = "witness image " + point_string(*v.witness_image);
    return !v.is_power_basis && v.witness_point && !in_some_translate(line, *v.witness_point, 2);
  });
  check(out, "linear relation on squares", [&](std::string& detail) {
    const auto lin = linear_part(LinearForms(Subspace::from_forms(line).basis().transposed()), 2);
    if (lin.size() == 1) detail = render_poly(lin[0]);
    return lin.size() == 1 && proportional(lin[0], P("3*x0-x1+x2-3*x3", 4)).has_value() &&
           proportional(coordinate_power_hypersurface(quadric, 2), lin[0]).has_value();
  });
  check(out, "the linear relation is nonzero at the witness image", [&](std::string&) {
    const auto v = is_power_basis_linear(line, line, 2);
    return v.witness_image && !evaluate(P("3*x0-x1+x2-3*x3", 4), *v.witness_image).is_zero();
  });
  check(out, "{f1, f2, f3} is a power basis", [&](std::string&) {
    auto cands = line;
    cands.push_back(quadric);
    return is_power_basis_mixed(line, cands, 2).is_power_basis;
  });
  return out;
}

CheckList circuit_forms() {
  CheckList out;
  const auto x = polys({"x0+x1+x2+x3+x4", "x1+2*x2+3*x3+4*x4"}, 5);
  const auto circuits =
      polys({"x1+2*x2+3*x3+4*x4", "x0-x2-2*x3-3*x4", "2*x0+x1-x3-2*x4", "3*x0+2*x1+x2-x4", "4*x0+3*x1+2*x2+x3"}, 5);
  const std::vector<Cyc> image{Cyc(16L), Cyc(16L), Cyc(1L), Cyc(36L), Cyc(9L)};
  check(out, "circuit forms are not a power basis", [&](std::string& detail) {
    const auto v = is_power_basis_linear(x, circuits, 2);
    detail = std::to_string(v.witnesses.size()) + " witness components";
    return !v.is_power_basis;
  });
  check(out, "all squared circuit forms vanish at [16:16:1:36:9]", [&](std::string&) {
    return std::all_of(circuits.begin(), circuits.end(), [&](const MPoly& f) {
      return evaluate(coordinate_power_hypersurface(f, 2), image).is_zero();
    });
  });
  check(out, "a witness component maps to [16:16:1:36:9]", [&](std::string&) {
    const auto v = is_power_basis_linear(x, circuits, 2);
    return std::any_of(v.witnesses.begin(), v.witnesses.end(), [&](const Subspace& s) {
      return s.dim() == 0 && same_point(phi(s.basis().row(0), 2), image);
    });
  });
  check(out, "[16:16:1:36:9] is not in the image of X", [&](std::string&) {
    return !in_some_translate(x, {Cyc(4L), Cyc(4L), Cyc(1L), Cyc(6L), Cyc(3L)}, 2);
  });
  return out;
}

CheckList plane_cases() {
  CheckList out;
  for (const auto& fx : fixtures::plane_cases())
    check(out, fx.name, [&fx](std::string& detail) {
      const auto c = classify_plane(fx.forms);
      const auto profile = minimal_generator_profile(fx.forms, 2).nonzero();
      detail = to_string(c.label) + ", n=" + std::to_string(fx.forms.n()) + ", profile";
      for (const auto& [d, count] : profile) detail += " " + std::to_string(count) + "@" + std::to_string(d);
      return c.label == fx.expected && profile == fx.profile;
    });
  return out;
}

struct Entry {
  std::string name;
  std::vector<std::string> aliases;
  CheckList (*run)();
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"table1", {"ortho-degrees"}, table1},
      {"steiner-quartic", {"quartic"}, steiner_quartic},
      {"circle", {"squaring-the-circle"}, circle_cases},
      {"codim2-line", {"line-in-p3"}, codim2_line},
      {"circuit-forms", {"circuits"}, circuit_forms},
      {"plane-cases", {"planes"}, plane_cases},
  };
  return entries;
}

}  // namespace

bool ReproReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const ReproCheck& c) { return c.passed; });
}

const std::vector<std::string>& repro_fixtures() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

std::optional<std::string> resolve_repro_name(const std::string& name) {
  for (const auto& e : registry())
    if (e.name == name || std::find(e.aliases.begin(), e.aliases.end(), name) != e.aliases.end()) return e.name;
  return std::nullopt;
}

ReproReport run_repro(const std::string& name) {
  const auto canonical = resolve_repro_name(name);
  require(canonical.has_value(), ErrorCode::InvalidArgument, "unknown fixture '" + name + "'");
  for (const auto& e : registry())
    if (e.name == *canonical) return {e.name, e.run()};
  fail(ErrorCode::Internal, "fixture registry is inconsistent");
}

}  // namespace cwp
