#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "cwpower/cwpower.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kFalse = 1, kInput = 2, kBudget = 3, kInternal = 4 };

struct Failure {
  cwp_status status;
  std::string message;
  long position;
};

void check(cwp_status s) {
  if (s != CWP_OK) throw Failure{s, cwp_last_error(), cwp_last_error_position()};
}

void input_error(const std::string& message) { throw Failure{CWP_INVALID_ARGUMENT, message, -1}; }

struct PolyDeleter {
  void operator()(cwp_poly* p) const { cwp_poly_free(p); }
};
using Poly = std::unique_ptr<cwp_poly, PolyDeleter>;

struct MatrixDeleter {
  void operator()(cwp_matrix* m) const { cwp_matrix_free(m); }
};
using Matrix = std::unique_ptr<cwp_matrix, MatrixDeleter>;

std::string take(char* s) {
  std::string out(s ? s : "");
  cwp_string_free(s);
  return out;
}

json take_json(char* s) { return json::parse(take(s)); }

std::string render(const cwp_poly* p) {
  char* s = nullptr;
  check(cwp_poly_render(p, &s));
  return take(s);
}

struct Options {
  std::string format = "json";
  std::optional<unsigned> n;
  unsigned r = 2;
  unsigned k = 1;
  std::optional<unsigned> chain_length;
  unsigned s = 2;
  unsigned m = 3;
  unsigned d = 2;
  unsigned dmax = 4;
  unsigned ctx = 1;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 25;
  std::string p;
  std::string order = "reci-first";
  std::string sampler;
  std::string in;
  std::vector<std::string> inputs;
  std::string matrix;
  std::vector<std::string> gens;
  std::vector<std::string> cands;
  cwp_budget budget{};
};

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream f(path);
  if (!f) input_error("cannot read '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(f, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto end = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(start, end - start + 1));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) input_error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Number of variables: n + 1 when given, otherwise one past the largest index.
unsigned nvars_for(const Options& o, const std::vector<std::string>& texts) {
  if (o.n) return *o.n + 1;
  unsigned top = 0;
  const std::regex var("x([0-9]+)");
  for (const auto& t : texts)
    for (auto it = std::sregex_iterator(t.begin(), t.end(), var); it != std::sregex_iterator(); ++it)
      top = std::max(top, static_cast<unsigned>(std::stoul((*it)[1].str())) + 1);
  if (top == 0) input_error("cannot infer the number of variables; pass --n");
  return top;
}

std::vector<Poly> parse_all(const std::vector<std::string>& texts, unsigned nvars, unsigned ctx) {
  std::vector<Poly> out;
  for (const auto& t : texts) {
    cwp_poly* p = nullptr;
    check(cwp_poly_parse(t.c_str(), nvars, ctx, &p));
    out.emplace_back(p);
  }
  return out;
}

std::vector<const cwp_poly*> views(const std::vector<Poly>& polys) {
  std::vector<const cwp_poly*> out;
  for (const auto& p : polys) out.push_back(p.get());
  return out;
}

std::vector<std::string> poly_inputs(const Options& o) {
  std::vector<std::string> texts = o.inputs;
  if (!o.in.empty())
    for (auto& l : read_lines(o.in)) texts.push_back(std::move(l));
  if (texts.empty()) input_error("no polynomial given");
  return texts;
}

Matrix matrix_input(const Options& o) {
  std::string text;
  if (!o.in.empty()) {
    text = read_file(o.in);
  } else if (!o.matrix.empty()) {
    text = o.matrix;
  } else {
    input_error("expected one matrix as JSON, inline or via --in");
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Failure{CWP_PARSE_ERROR, std::string("matrix JSON: ") + e.what(), static_cast<long>(e.byte)};
  }
  if (j.is_object() && j.contains("rows")) j = j["rows"];
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) input_error("matrix must be a nonempty array of rows");
  const std::size_t rows = j.size(), cols = j[0].size();
  std::vector<std::string> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) input_error("matrix rows have different lengths");
    for (const auto& e : row) {
      if (e.is_number_integer()) {
        entries.push_back(std::to_string(e.get<long long>()));
      } else if (e.is_string()) {
        entries.push_back(e.get<std::string>());
      } else {
        input_error("matrix entries must be integers or coefficient strings");
      }
    }
  }
  std::vector<const char*> ptrs;
  for (const auto& e : entries) ptrs.push_back(e.c_str());
  cwp_matrix* m = nullptr;
  check(cwp_matrix_new(rows, cols, ptrs.data(), o.ctx, &m));
  return Matrix(m);
}

struct Result {
  json doc;
  int exit = kOk;
  // Text-mode rendering; the JSON fields are printed as key: value otherwise.
  std::optional<std::string> text;
};

Result power_hyp(const Options& o, bool reciprocal) {
  const auto texts = poly_inputs(o);
  const auto polys = parse_all(texts, nvars_for(o, texts), o.ctx);
  const auto v = views(polys);
  cwp_poly* out = nullptr;
  if (reciprocal) {
    check(cwp_reciprocal(v.data(), v.size(), &out));
  } else {
    check(cwp_power_hypersurface(v.data(), v.size(), o.r, &out));
  }
  const Poly result(out);
  json doc{{"factors", texts}};
  if (!reciprocal) doc["r"] = o.r;
  doc["result"] = render(result.get());
  return {doc, kOk, doc["result"].get<std::string>()};
}

Result powsum(const Options& o) {
  if (!o.n) input_error("--n is required");
  cwp_poly* out = nullptr;
  check(cwp_gen_powsum(o.p.c_str(), *o.n, &out));
  const Poly result(out);
  json doc{{"p", o.p}, {"n", *o.n}, {"result", render(result.get())}};
  return {doc, kOk, doc["result"].get<std::string>()};
}

Result dual_chain(const Options& o) {
  char* dual = nullptr;
  const cwp_status ds = cwp_dual_exponent(o.p.c_str(), &dual);
  json doc{{"p", o.p}};
  if (ds == CWP_OK) {
    doc["dual"] = take(dual);
  } else if (ds == CWP_UNDEFINED_DUAL) {
    doc["dual"] = nullptr;
  } else {
    check(ds);
  }
  if (o.chain_length) {
    char* chain = nullptr;
    check(cwp_chain_exponent(o.p.c_str(), *o.chain_length, o.order == "reci-first", &chain));
    doc["k"] = *o.chain_length;
    doc["order"] = o.order;
    doc["chain"] = take(chain);
  }
  return {doc, kOk, {}};
}

Result matrix_json_command(const Options& o, const std::string& name) {
  const Matrix b = matrix_input(o);
  char* out = nullptr;
  const cwp_budget* budget = &o.budget;
  if (name == "matroid") check(cwp_matroid_summary(b.get(), &out));
  if (name == "degree-linear") check(cwp_degree_linear_power(b.get(), o.r, &out));
  if (name == "stab-fix") check(cwp_stab_fix_linear(b.get(), o.r, budget, &out));
  if (name == "classify-line") check(cwp_classify_line(b.get(), &out));
  if (name == "classify-plane") check(cwp_classify_plane(b.get(), &out));
  if (name == "forms") check(cwp_vanishing_forms(b.get(), o.r, o.d, budget, &out));
  if (name == "profile") check(cwp_generator_profile(b.get(), o.r, o.dmax, budget, &out));
  return {take_json(out), kOk, {}};
}

Result stab_fix(const Options& o) {
  if (o.sampler.empty()) return matrix_json_command(o, "stab-fix");
  if (o.sampler != "so") input_error("unknown sampler '" + o.sampler + "'");
  if (!o.seed) input_error("--seed is required for a sampled oracle");
  char* out = nullptr;
  check(cwp_stab_fix_so(o.m, o.r, *o.seed, o.samples, &o.budget, &out));
  return {take_json(out), kOk, {}};
}

Result ortho_degree(const Options& o) {
  char* out = nullptr;
  check(cwp_ortho_degree(o.m, &out));
  const json doc = take_json(out);
  return {doc, kOk, "degO2 = " + doc["deg_SO_squared"].get<std::string>()};
}

Result rank1_gens(const Options& o) {
  char* out = nullptr;
  check(cwp_rank1_gens(o.k, o.s, &out));
  return {take_json(out), kOk, {}};
}

Result eig_test(const Options& o) {
  const Matrix a = matrix_input(o);
  int verdict = 0;
  check(cwp_eig_test(a.get(), &verdict));
  return {json{{"verdict", verdict == 1}}, verdict ? kOk : kFalse, verdict ? "true" : "false"};
}

// Generators and candidates from --gen/--cand, or from --in with a line
// "---" between generators and candidates.
void split_basis_inputs(const Options& o, std::vector<std::string>& gens, std::vector<std::string>& cands) {
  gens = o.gens;
  cands = o.cands;
  if (!o.in.empty()) {
    bool second = false;
    for (auto& l : read_lines(o.in)) {
      if (l == "---") {
        second = true;
        continue;
      }
      (second ? cands : gens).push_back(std::move(l));
    }
  }
  if (gens.empty()) input_error("no generators given");
}

Result power_basis_check(const Options& o) {
  std::vector<std::string> gens, cands;
  split_basis_inputs(o, gens, cands);
  if (cands.empty()) input_error("no candidates given");
  std::vector<std::string> all = gens;
  all.insert(all.end(), cands.begin(), cands.end());
  const unsigned nv = nvars_for(o, all);
  const auto g = parse_all(gens, nv, o.ctx);
  const auto f = parse_all(cands, nv, o.ctx);
  const auto gv = views(g), fv = views(f);
  int verdict = 0;
  char* out = nullptr;
  check(cwp_power_basis_check(gv.data(), gv.size(), fv.data(), fv.size(), o.r, &o.budget, &verdict, &out));
  return {take_json(out), verdict ? kOk : kFalse, {}};
}

Result power_basis_make(const Options& o) {
  std::vector<std::string> gens, cands;
  split_basis_inputs(o, gens, cands);
  const auto g = parse_all(gens, nvars_for(o, gens), o.ctx);
  const auto gv = views(g);
  char* out = nullptr;
  check(cwp_power_basis_make(gv.data(), gv.size(), o.r, &o.budget, &out));
  const json doc = take_json(out);
  std::string text;
  for (const auto& form : doc["forms"]) text += form.get<std::string>() + "\n";
  text.pop_back();
  return {doc, kOk, text};
}

Result repro(const Options& o) {
  std::vector<std::string> names = o.inputs;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    char* list = nullptr;
    check(cwp_repro_names(&list));
    names = take_json(list).get<std::vector<std::string>>();
  }
  json reports = json::array();
  std::string text;
  bool all_passed = true;
  for (const auto& name : names) {
    int passed = 0;
    char* out = nullptr;
    check(cwp_repro_run(name.c_str(), &passed, &out));
    json report = take_json(out);
    for (const auto& c : report["checks"])
      text += std::string(c["passed"].get<bool>() ? "PASS " : "FAIL ") + report["fixture"].get<std::string>() + ": " +
              c["name"].get<std::string>() + "\n";
    all_passed = all_passed && passed;
    reports.push_back(std::move(report));
  }
  text.pop_back();
  return {json{{"passed", all_passed}, {"fixtures", reports}}, all_passed ? kOk : kFalse, text};
}

int exit_for(cwp_status s) {
  switch (s) {
    case CWP_OK: return kOk;
    case CWP_BUDGET_EXCEEDED: return kBudget;
    case CWP_INTERNAL:
    case CWP_INTERNAL_CLASSIFICATION_ERROR: return kInternal;
    default: return kInput;
  }
}

std::string text_of(const json& doc) {
  std::string out;
  for (const auto& [key, value] : doc.items()) {
    if (key == "schema" || key == "command") continue;
    out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coordinate-wise powers of algebraic varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  cwp_budget_default(&o.budget);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--budget-group", o.budget.group_elements, "Maximum group elements enumerated")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1000000000}));
  app.add_option("--budget-frontier", o.budget.frontier, "Maximum frontier subspaces")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
  app.add_option("--budget-columns", o.budget.columns, "Maximum interpolation columns")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));

  auto add_n = [&o](CLI::App* c) { c->add_option("--n", o.n, "Projective dimension of the ambient space")->check(CLI::Range(0, 30)); };
  auto add_r = [&o](CLI::App* c) { c->add_option("--r", o.r, "Power")->check(CLI::Range(1, 64)); };
  auto add_ctx = [&o](CLI::App* c) {
    c->add_option("--ctx", o.ctx, "Order of the root of unity z in coefficients")->check(CLI::Range(1, 240));
  };
  auto add_in = [&o](CLI::App* c) { c->add_option("--in", o.in, "Input file")->check(CLI::ExistingFile); };
  auto add_inputs = [&o](CLI::App* c, const char* what) { c->add_option("inputs", o.inputs, what); };
  auto add_matrix = [&o](CLI::App* c) { c->add_option("matrix", o.matrix, "Matrix as a JSON array of rows"); };

  std::vector<std::pair<CLI::App*, std::function<Result()>>> commands;
  auto command = [&](const char* name, const char* help, std::function<Result()> run) {
    CLI::App* c = app.add_subcommand(name, help);
    commands.emplace_back(c, std::move(run));
    return c;
  };

  auto* ph = command("power-hyp", "Coordinate-wise power of a hypersurface given by irreducible factors",
                     [&] { return power_hyp(o, false); });
  add_n(ph), add_r(ph), add_ctx(ph), add_in(ph), add_inputs(ph, "Irreducible factors");
  auto* rc = command("reciprocal", "Reciprocal hypersurface", [&] { return power_hyp(o, true); });
  add_n(rc), add_ctx(rc), add_in(rc), add_inputs(rc, "Irreducible factors");
  auto* ps = command("powsum", "Generalised power sum for an exponent s/r", [&] { return powsum(o); });
  ps->add_option("--p", o.p, "Exponent s or s/r")->required();
  add_n(ps);
  auto* dc = command("dual-chain", "Dual exponent and alternating dual/reciprocal chains", [&] { return dual_chain(o); });
  dc->add_option("--p", o.p, "Exponent s or s/r")->required();
  dc->add_option("--k", o.chain_length, "Chain length")->check(CLI::Range(0, 1000));
  dc->add_option("--order", o.order, "Chain order")->check(CLI::IsMember({"dual-first", "reci-first"}));
  for (auto [name, about] : std::vector<std::pair<const char*, const char*>>{
           {"matroid", "Coloops and components of the matroid of B"},
           {"degree-linear", "Degree of the coordinate-wise power of the linear space of B"},
           {"classify-line", "Case of the square of a line"},
           {"classify-plane", "Case of the square of a plane"},
           {"forms", "Forms of degree d vanishing on the power of the linear space"},
           {"profile", "Minimal generator counts by degree"}}) {
    const std::string n = name;
    auto* c = command(name, about, [&o, n] { return matrix_json_command(o, n); });
    add_in(c), add_ctx(c), add_matrix(c);
    if (n != "matroid" && n != "classify-line" && n != "classify-plane") add_r(c);
    if (n == "forms") c->add_option("--d", o.d, "Degree")->check(CLI::Range(0, 12));
    if (n == "profile") c->add_option("--dmax", o.dmax, "Largest degree examined")->check(CLI::Range(1, 10));
  }
  auto* sf = command("stab-fix", "Stabiliser and fixing group sizes", [&] { return stab_fix(o); });
  add_in(sf), add_ctx(sf), add_r(sf), add_matrix(sf);
  sf->add_option("--sampler", o.sampler, "Named sampler instead of B")->check(CLI::IsMember({"so"}));
  sf->add_option("--m", o.m, "Matrix size for the SO(m) sampler")->check(CLI::Range(1, 6));
  sf->add_option("--seed", o.seed, "Seed for the sampler");
  sf->add_option("--samples", o.samples, "Number of sample points")->check(CLI::Range(1, 10000));
  auto* od = command("ortho-degree", "Degrees of SO(m) and its coordinate-wise square", [&] { return ortho_degree(o); });
  od->add_option("--m", o.m, "Matrix size")->required()->check(CLI::Range(1, 16));
  auto* rg = command("rank1-gens", "Minor relations for rank-one completion", [&] { return rank1_gens(o); });
  rg->add_option("--k", o.k, "k, the matrix size is k+1")->required()->check(CLI::Range(1, 30));
  rg->add_option("--s", o.s, "Size of the shifted principal blocks")->required()->check(CLI::Range(2, 31));
  auto* et = command("eig-test", "Repeated-eigenvalue test for a rational symmetric matrix", [&] { return eig_test(o); });
  add_in(et), add_matrix(et);
  for (auto [name, about, run] : std::vector<std::tuple<const char*, const char*, Result (*)(const Options&)>>{
           {"power-basis-check", "Decide whether candidate forms are a power basis", power_basis_check},
           {"power-basis-make", "Construct a power basis from linear generators", power_basis_make}}) {
    auto* c = command(name, about, [&o, run = run] { return run(o); });
    add_n(c), add_r(c), add_ctx(c), add_in(c);
    c->add_option("--gen,-g", o.gens, "Generator of the ideal of X");
    if (std::string(name) == "power-basis-check") c->add_option("--cand,-f", o.cands, "Candidate form");
  }
  auto* rp = command("repro", "Run reproduction fixtures", [&] { return repro(o); });
  add_inputs(rp, "Fixture names, or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  for (auto& [sub, run] : commands) {
    if (!sub->parsed()) continue;
    try {
      Result res = run();
      json doc{{"schema", 1}, {"command", sub->get_name()}};
      for (auto& [key, value] : res.doc.items()) doc[key] = value;
      if (o.format == "json") {
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << (res.text ? *res.text : text_of(doc)) << "\n";
      }
      return res.exit;
    } catch (const Failure& f) {
      std::cerr << "error: " << cwp_status_name(f.status) << ": " << f.message;
      if (f.position >= 0 && f.message.find("position") == std::string::npos) std::cerr << " (position " << f.position << ")";
      std::cerr << "\n";
      return exit_for(f.status);
    }
  }
  return kInput;
}
