#include "cwpower/cwpower.h"

#include <algorithm>
#include <cstring>
#include <string>
#include <vector>

#include "cwpower/matroid.hpp"
#include "cwpower/power_basis.hpp"
#include "cwpower/power_map.hpp"
#include "cwpower/rank1.hpp"
#include "cwpower/repro.hpp"
#include "cwpower/veronese.hpp"
#include "json.hpp"

struct cwp_poly {
  cwp::MPoly value;
};

struct cwp_matrix {
  cwp::CycMatrix value;
};

namespace {

using json = nlohmann::ordered_json;

thread_local std::string last_error;
thread_local long last_position = -1;

cwp_status status_of(cwp::ErrorCode code) {
  switch (code) {
    case cwp::ErrorCode::InvalidArgument: return CWP_INVALID_ARGUMENT;
    case cwp::ErrorCode::Parse: return CWP_PARSE_ERROR;
    case cwp::ErrorCode::DimensionMismatch: return CWP_DIMENSION_MISMATCH;
    case cwp::ErrorCode::NotInPowerSubring: return CWP_NOT_IN_POWER_SUBRING;
    case cwp::ErrorCode::CoordinateHyperplaneComponent: return CWP_COORDINATE_HYPERPLANE_COMPONENT;
    case cwp::ErrorCode::UndefinedDual: return CWP_UNDEFINED_DUAL;
    case cwp::ErrorCode::ForbiddenExponent: return CWP_FORBIDDEN_EXPONENT;
    case cwp::ErrorCode::RankDeficient: return CWP_RANK_DEFICIENT;
    case cwp::ErrorCode::BudgetExceeded: return CWP_BUDGET_EXCEEDED;
    case cwp::ErrorCode::UnsupportedSize: return CWP_UNSUPPORTED_SIZE;
    case cwp::ErrorCode::Unsupported: return CWP_UNSUPPORTED;
    case cwp::ErrorCode::InternalClassificationError: return CWP_INTERNAL_CLASSIFICATION_ERROR;
    case cwp::ErrorCode::Internal: return CWP_INTERNAL;
  }
  return CWP_INTERNAL;
}

template <class Body>
cwp_status guarded(Body&& body) {
  last_error.clear();
  last_position = -1;
  try {
    body();
    return CWP_OK;
  } catch (const cwp::ParseError& e) {
    last_error = e.what();
    last_position = static_cast<long>(e.position());
    return CWP_PARSE_ERROR;
  } catch (const cwp::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CWP_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CWP_INTERNAL;
  }
}

void require_out(const void* p) { cwp::require(p != nullptr, cwp::ErrorCode::InvalidArgument, "null argument"); }

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const json& j, char** out) { *out = copy_string(j.dump()); }

cwp::Budget budget_of(const cwp_budget* b) {
  cwp::Budget out;
  if (b) {
    out.group_elements = b->group_elements;
    out.frontier = b->frontier;
    out.columns = b->columns;
  }
  return out;
}

std::vector<cwp::MPoly> poly_list(const cwp_poly* const* polys, std::size_t count) {
  cwp::require(count > 0 && polys != nullptr, cwp::ErrorCode::InvalidArgument, "at least one polynomial is required");
  std::vector<cwp::MPoly> out;
  for (std::size_t i = 0; i < count; ++i) {
    require_out(polys[i]);
    out.push_back(polys[i]->value);
  }
  return out;
}

cwp::QMatrix rational_matrix(const cwp_matrix* m) {
  require_out(m);
  cwp::QMatrix out(m->value.rows(), m->value.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) {
      const cwp::Cyc c = m->value(i, j).demoted();
      cwp::require(c.is_rational(), cwp::ErrorCode::InvalidArgument, "this operation needs a rational matrix");
      out(i, j) = c.rational();
    }
  return out;
}

cwp::Rational parse_exponent(const char* text) {
  require_out(text);
  cwp::Rational p;
  cwp::require(p.set_str(text, 10) == 0, cwp::ErrorCode::Parse, std::string("invalid exponent '") + text + "'");
  cwp::require(p.get_den() != 0, cwp::ErrorCode::InvalidArgument, "exponent denominator is zero");
  p.canonicalize();
  return p;
}

std::string rational_string(const cwp::Rational& p) { return p.get_str(); }

json point_json(const std::vector<cwp::Cyc>& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(c.to_string());
  return out;
}

json matrix_json(const cwp::CycMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(point_json(m.row(i)));
  return out;
}

json poly_array(const std::vector<cwp::MPoly>& polys) {
  json out = json::array();
  for (const auto& f : polys) out.push_back(cwp::render_poly(f));
  return out;
}

json subspace_json(const cwp::Subspace& s) {
  return json{{"dim", s.dim()}, {"equations", matrix_json(s.equations())}, {"basis", matrix_json(s.basis())}};
}

}  // namespace

extern "C" {

const char* cwp_last_error(void) { return last_error.c_str(); }

long cwp_last_error_position(void) { return last_position; }

const char* cwp_status_name(cwp_status status) {
  switch (status) {
    case CWP_OK: return "ok";
    case CWP_INVALID_ARGUMENT: return "invalid-argument";
    case CWP_PARSE_ERROR: return "parse-error";
    case CWP_DIMENSION_MISMATCH: return "dimension-mismatch";
    case CWP_NOT_IN_POWER_SUBRING: return "not-in-power-subring";
    case CWP_COORDINATE_HYPERPLANE_COMPONENT: return "coordinate-hyperplane-component";
    case CWP_UNDEFINED_DUAL: return "undefined-dual";
    case CWP_FORBIDDEN_EXPONENT: return "forbidden-exponent";
    case CWP_RANK_DEFICIENT: return "rank-deficient";
    case CWP_BUDGET_EXCEEDED: return "budget-exceeded";
    case CWP_UNSUPPORTED_SIZE: return "unsupported-size";
    case CWP_UNSUPPORTED: return "unsupported";
    case CWP_INTERNAL_CLASSIFICATION_ERROR: return "internal-classification-error";
    case CWP_INTERNAL: return "internal";
  }
  return "unknown";
}

void cwp_string_free(char* s) { delete[] s; }

void cwp_budget_default(cwp_budget* out) {
  if (!out) return;
  const cwp::Budget b;
  out->group_elements = b.group_elements;
  out->frontier = b.frontier;
  out->columns = b.columns;
}

cwp_status cwp_poly_parse(const char* text, unsigned nvars, unsigned r_context, cwp_poly** out) {
  return guarded([&] {
    require_out(text);
    require_out(out);
    *out = new cwp_poly{cwp::parse_poly(text, nvars, r_context == 0 ? 1 : r_context)};
  });
}

void cwp_poly_free(cwp_poly* p) { delete p; }

cwp_status cwp_poly_render(const cwp_poly* p, char** out) {
  return guarded([&] {
    require_out(p);
    require_out(out);
    *out = copy_string(cwp::render_poly(p->value));
  });
}

unsigned cwp_poly_nvars(const cwp_poly* p) { return p ? p->value.nvars() : 0; }

cwp_status cwp_poly_degree(const cwp_poly* p, unsigned* out) {
  return guarded([&] {
    require_out(p);
    require_out(out);
    *out = p->value.degree();
  });
}

cwp_status cwp_poly_equal(const cwp_poly* a, const cwp_poly* b, int* out) {
  return guarded([&] {
    require_out(a);
    require_out(b);
    require_out(out);
    *out = a->value == b->value ? 1 : 0;
  });
}

cwp_status cwp_matrix_new(size_t rows, size_t cols, const char* const* entries, unsigned r_context,
                          cwp_matrix** out) {
  return guarded([&] {
    require_out(out);
    cwp::require(rows > 0 && cols > 0 && entries != nullptr, cwp::ErrorCode::InvalidArgument, "empty matrix");
    const unsigned ctx = r_context == 0 ? 1 : r_context;
    cwp::CycMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
      require_out(entries[i]);
      const cwp::MPoly c = cwp::parse_poly(entries[i], 1, ctx);
      cwp::require(c.is_zero() || c.degree() == 0, cwp::ErrorCode::InvalidArgument,
                   std::string("matrix entry '") + entries[i] + "' is not a constant");
      m(i / cols, i % cols) = c.coefficient(cwp::Monomial::one(1));
    }
    *out = new cwp_matrix{std::move(m)};
  });
}

void cwp_matrix_free(cwp_matrix* m) { delete m; }

cwp_status cwp_power_hypersurface(const cwp_poly* const* factors, size_t count, unsigned r, cwp_poly** out) {
  return guarded([&] {
    require_out(out);
    const cwp::FactoredHypersurface h(poly_list(factors, count));
    *out = new cwp_poly{cwp::coordinate_power_hypersurface(h, r)};
  });
}

cwp_status cwp_sym_r(const cwp_poly* const* factors, size_t count, unsigned r, cwp_poly** out) {
  return guarded([&] {
    require_out(out);
    const cwp::FactoredHypersurface h(poly_list(factors, count));
    *out = new cwp_poly{cwp::sym_r(h, r)};
  });
}

cwp_status cwp_reciprocal(const cwp_poly* const* factors, size_t count, cwp_poly** out) {
  return guarded([&] {
    require_out(out);
    const cwp::FactoredHypersurface h(poly_list(factors, count));
    *out = new cwp_poly{cwp::reciprocal_hypersurface(h)};
  });
}

cwp_status cwp_gen_powsum(const char* p, unsigned n, cwp_poly** out) {
  return guarded([&] {
    require_out(out);
    *out = new cwp_poly{cwp::gen_powsum(parse_exponent(p), n)};
  });
}

cwp_status cwp_dual_exponent(const char* p, char** out) {
  return guarded([&] {
    require_out(out);
    *out = copy_string(rational_string(cwp::dual_exponent(parse_exponent(p))));
  });
}

cwp_status cwp_chain_exponent(const char* p, unsigned k, int reci_first, char** out) {
  return guarded([&] {
    require_out(out);
    const auto order = reci_first ? cwp::ChainOrder::ReciFirst : cwp::ChainOrder::DualFirst;
    *out = copy_string(rational_string(cwp::chain_exponent(parse_exponent(p), k, order)));
  });
}

cwp_status cwp_matroid_summary(const cwp_matrix* b, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    const cwp::LinearSpaceEmbedding l(rational_matrix(b));
    const auto m = cwp::matroid_summary(l);
    emit(json{{"n", m.n}, {"k", m.k}, {"coloops", m.coloops}, {"components", m.components}, {"s", m.s()}, {"t", m.t()}},
         out_json);
  });
}

cwp_status cwp_degree_linear_power(const cwp_matrix* b, unsigned r, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    const cwp::LinearSpaceEmbedding l(rational_matrix(b));
    const auto m = cwp::matroid_summary(l);
    emit(json{{"r", r}, {"k", m.k}, {"s", m.s()}, {"t", m.t()}, {"degree", cwp::degree_linear_power(m, r).get_str()}},
         out_json);
  });
}

cwp_status cwp_stab_fix_linear(const cwp_matrix* b, unsigned r, const cwp_budget* budget, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    const cwp::LinearSpaceEmbedding l(rational_matrix(b));
    const auto g = cwp::stab_fix_linear(l, r, budget_of(budget));
    emit(json{{"r", r}, {"stab", g.stab.get_str()}, {"fix", g.fix.get_str()}, {"sampled", false}}, out_json);
  });
}

cwp_status cwp_stab_fix_so(unsigned m, unsigned r, uint64_t seed, size_t samples, const cwp_budget* budget,
                           char** out_json) {
  return guarded([&] {
    require_out(out_json);
    const auto g = cwp::stab_fix_so(m, r, seed, samples, budget_of(budget));
    emit(json{{"m", m}, {"r", r}, {"seed", seed}, {"samples", samples}, {"stab", g.stab.get_str()},
              {"fix", g.fix.get_str()}, {"sampled", true}},
         out_json);
  });
}

cwp_status cwp_ortho_degree(unsigned m, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    const auto d = cwp::ortho_degree(m);
    emit(json{{"m", m},
              {"det", d.det.get_str()},
              {"deg_O", d.deg_o.get_str()},
              {"deg_SO", d.deg_so.get_str()},
              {"deg_SO_squared", d.deg_o_squared.get_str()}},
         out_json);
  });
}

cwp_status cwp_classify_line(const cwp_matrix* b, char** out_json) {
  return guarded([&] {
    require_out(b);
    require_out(out_json);
    const cwp::LinearForms l(b->value);
    emit(json{{"n", l.n()}, {"kind", cwp::to_string(cwp::classify_line(l))}}, out_json);
  });
}

cwp_status cwp_classify_plane(const cwp_matrix* b, char** out_json) {
  return guarded([&] {
    require_out(b);
    require_out(out_json);
    const cwp::LinearForms l(b->value);
    const auto c = cwp::classify_plane(l);
    emit(json{{"n", l.n()},
              {"case", cwp::to_string(c.label)},
              {"points", c.num_points},
              {"conics", c.conics},
              {"conic_rank", c.conic_rank}},
         out_json);
  });
}

cwp_status cwp_vanishing_forms(const cwp_matrix* b, unsigned r, unsigned d, const cwp_budget* budget,
                               char** out_json) {
  return guarded([&] {
    require_out(b);
    require_out(out_json);
    const auto forms = cwp::vanishing_forms_on_power(cwp::LinearForms(b->value), r, d, budget_of(budget));
    emit(json{{"r", r}, {"d", d}, {"dimension", forms.size()}, {"forms", poly_array(forms)}}, out_json);
  });
}

cwp_status cwp_generator_profile(const cwp_matrix* b, unsigned r, unsigned dmax, const cwp_budget* budget,
                                 char** out_json) {
  return guarded([&] {
    require_out(b);
    require_out(out_json);
    const auto p = cwp::minimal_generator_profile(cwp::LinearForms(b->value), r, dmax, budget_of(budget));
    json counts = json::object();
    for (const auto& [d, c] : p.nonzero()) counts[std::to_string(d)] = c;
    emit(json{{"r", r}, {"dmax", p.dmax}, {"counts", counts}, {"certified_beyond_dmax", p.certified_beyond_dmax}},
         out_json);
  });
}

cwp_status cwp_rank1_gens(unsigned k, unsigned s, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    const cwp::SymVarIndex idx(k, s);
    const auto namer = [&idx](unsigned v) { return idx.name(v); };
    auto relations = [&](const std::vector<cwp::MinorRelation>& list) {
      json out = json::array();
      for (const auto& rel : list)
        out.push_back(json{{"family", cwp::to_string(rel.family)},
                           {"indices", rel.indices},
                           {"relation", cwp::render_poly(rel.expansion, namer)}});
      return out;
    };
    const auto fam = cwp::gens_families(idx);
    const auto bases = cwp::bases_BEFG(idx);
    const auto formulas = cwp::basis_count_formulas(idx);
    const auto expected = cwp::expected_counts(idx);
    emit(json{{"k", k},
              {"s", s},
              {"families",
               {{"E", relations(fam.e)}, {"F", relations(fam.f)}, {"G", relations(fam.g)}, {"H1", relations(fam.h1)},
                {"H2", relations(fam.h2)}}},
              {"bases", {{"B_E", relations(bases.b_e)}, {"B_F", relations(bases.b_f)}, {"B_G", relations(bases.b_g)}}},
              {"basis_count_formulas",
               {{"B_E", formulas.b_e.get_str()}, {"B_F", formulas.b_f.get_str()}, {"B_G", formulas.b_g.get_str()}}},
              {"expected", {{"quadrics", expected.quadrics.get_str()}, {"cubics", expected.cubics}}}},
         out_json);
  });
}

cwp_status cwp_eig_test(const cwp_matrix* a, int* out_verdict) {
  return guarded([&] {
    require_out(out_verdict);
    *out_verdict = cwp::eig_degenerate_test(rational_matrix(a)) ? 1 : 0;
  });
}

cwp_status cwp_power_basis_check(const cwp_poly* const* generators, size_t num_generators,
                                 const cwp_poly* const* candidates, size_t num_candidates, unsigned r,
                                 const cwp_budget* budget, int* out_verdict, char** out_json) {
  return guarded([&] {
    require_out(out_verdict);
    require_out(out_json);
    const auto gens = poly_list(generators, num_generators);
    const auto cands = poly_list(candidates, num_candidates);
    const bool linear = std::all_of(cands.begin(), cands.end(), [](const cwp::MPoly& f) { return f.degree() == 1; });
    const auto v = linear ? cwp::is_power_basis_linear(gens, cands, r, budget_of(budget))
                          : cwp::is_power_basis_mixed(gens, cands, r, budget_of(budget));
    json j{{"r", r}, {"route", linear ? "linear" : "mixed"}, {"is_power_basis", v.is_power_basis},
           {"witness_components", v.witnesses.size()}};
    if (!v.witnesses.empty()) j["witness_subspace"] = subspace_json(v.witnesses.front());
    if (v.witness_point) j["witness_point"] = point_json(*v.witness_point);
    if (v.witness_image) j["witness_image"] = point_json(*v.witness_image);
    *out_verdict = v.is_power_basis ? 1 : 0;
    emit(j, out_json);
  });
}

cwp_status cwp_power_basis_make(const cwp_poly* const* generators, size_t num_generators, unsigned r,
                                const cwp_budget* budget, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    const auto forms = cwp::construct_power_basis(poly_list(generators, num_generators), r, budget_of(budget));
    emit(json{{"r", r}, {"count", forms.size()}, {"forms", poly_array(forms)}}, out_json);
  });
}

cwp_status cwp_repro_names(char** out_json) {
  return guarded([&] {
    require_out(out_json);
    emit(json(cwp::repro_fixtures()), out_json);
  });
}

cwp_status cwp_repro_run(const char* name, int* out_passed, char** out_json) {
  return guarded([&] {
    require_out(name);
    require_out(out_passed);
    require_out(out_json);
    const auto report = cwp::run_repro(name);
    json checks = json::array();
    for (const auto& c : report.checks) checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    *out_passed = report.passed() ? 1 : 0;
    emit(json{{"fixture", report.fixture}, {"passed", report.passed()}, {"checks", checks}}, out_json);
  });
}

}  // extern "C"
