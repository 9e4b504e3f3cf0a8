#include "grext/cli/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "grext/classify/classify.hpp"
#include "grext/classify/groupoid_nerve.hpp"
#include "grext/classify/homotopy.hpp"
#include "grext/cli/problem.hpp"
#include "grext/densegroup/carriere.hpp"
#include "grext/exactnum/pell.hpp"
#include "grext/grpd/suites.hpp"

namespace grext {

using nlohmann::json;

namespace {

json int_json(const Integer& z) {
  if (auto v = to_int64(z)) return *v;
  return z.get_str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("InputNotFound", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string problem_text(const std::string& spec) {
  if (spec.rfind("preset:", 0) == 0) return problem_preset(spec.substr(7));
  return read_file(spec);
}

Nerve load_nerve(const std::string& spec) {
  if (spec.rfind("preset:", 0) == 0) return nerve_preset(spec.substr(7));
  return parse_nerve(read_file(spec));
}

std::string element_text(const AutRhoElement& a) {
  if (a.is_scalar()) return a.scalar().pretty();
  std::string s = "[";
  const std::size_t n = a.extension.size();
  for (std::size_t r = 0; r < n; ++r) {
    s += r ? ",[" : "[";
    for (std::size_t c = 0; c < n; ++c) s += (c ? "," : "") + a.extension(r, c).pretty();
    s += "]";
  }
  return s + "]";
}

json descriptor_json(const GroupDescriptor& g) {
  json j;
  j["name"] = g.name;
  j["complete"] = g.complete;
  j["note"] = g.note;
  j["generators"] = json::array();
  j["matrices"] = json::array();
  for (const auto& a : g.generators) {
    j["generators"].push_back(element_text(a));
    j["matrices"].push_back(a.T.to_string());
  }
  j["invariants"] = g.invariants ? json(g.invariants->name()) : json(nullptr);
  return j;
}

json vector_json(const FieldVector& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(x.pretty());
  return j;
}

json ga_json(const GAElement& g) { return {{"a", g.a.pretty()}, {"b", g.b.pretty()}}; }

void render_text(const json& j, std::ostream& out, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    out << indent << it.key() << ":";
    if (v.is_object()) {
      out << "\n";
      render_text(v, out, indent + "  ");
    } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); })) {
      out << "\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          out << indent << "  -\n";
          render_text(e, out, indent + "    ");
        } else {
          out << indent << "  - " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
        }
      }
    } else if (v.is_string()) {
      out << " " << v.get<std::string>() << "\n";
    } else {
      out << " " << v.dump() << "\n";
    }
  }
}

void emit(const json& report, const std::string& format, std::ostream& out) {
  if (format == "text") {
    render_text(report, out, "");
  } else {
    out << report.dump(2) << "\n";
  }
}

struct Options {
  std::string format = "json";
  long bound = 5;
  std::size_t budget = kDefaultBudget;
  int threads = 0;
  std::string input;
  std::string nerve;
  std::string preset;
  std::string mode = "pointed-iso";
  int quotient = 0;
  std::string g = "R";
  int max_degree = 5;
  std::string suite = "all";
  std::size_t samples = 10000;
  std::uint64_t seed = 7;
  std::string d;
  std::string matrix;
  std::string word;
  std::string group;
  std::string action = "point";
};

json lattice_inputs(const ProblemDocument& doc) { return json::parse(problem_to_json(doc)); }

json cmd_aut_rho(const Options& o, json& inputs, json& flags) {
  auto doc = parse_problem(problem_text(o.input));
  inputs["problem"] = lattice_inputs(doc);
  inputs["bound"] = o.bound;
  auto L = problem_lattice(doc);
  SearchOptions so;
  so.bound = o.bound;
  auto aut = aut_rho(L, so);
  json r = descriptor_json(aut);
  r["density_checked"] = L.density_checked();
  if (!L.density_checked()) flags.push_back("density_checked=false");
  if (!aut.complete) flags.push_back("incomplete: verified subgroup only");
  if (L.ambient_dim() == 1) {
    json ring = json::array();
    for (const auto& b : multiplier_ring(L).basis) ring.push_back(b.pretty());
    r["multiplier_ring"] = ring;
  }
  auto out = out_rho(L, so);
  r["out"] = out.out.name;
  r["inner"] = out.inner.name;
  r["center"] = out.center.name;
  return r;
}

json classification_json(const ClassificationReport& c) {
  json j;
  j["mode"] = c.mode;
  j["nerve"] = c.nerve;
  j["pi1"] = c.pi1;
  j["pi1_abelianization"] = c.pi1_abelianization;
  j["coefficients"] = c.coefficients;
  j["classes"] = c.classes;
  j["count"] = c.count ? json(*c.count) : json(nullptr);
  if (c.mode == "equivalence") {
    j["base"] = c.base;
    j["fiber"] = c.fiber;
  }
  j["complete"] = c.complete;
  j["flags"] = c.flags;
  return j;
}

json cmd_classify(const Options& o, json& inputs, json& flags) {
  auto doc = parse_problem(problem_text(o.input));
  inputs["problem"] = lattice_inputs(doc);
  inputs["mode"] = o.mode;
  inputs["bound"] = o.bound;
  inputs["budget"] = o.budget;
  if (o.nerve.empty()) fail("MissingNerve", "classify needs -n nerve.json or -n preset:NAME");
  Nerve X = load_nerve(o.nerve);
  inputs["nerve"] = X.name();
  auto L = problem_lattice(doc);
  SearchOptions so;
  so.bound = o.bound;
  auto aut = aut_rho(L, so);
  auto mode = parse_classify_mode(o.mode);
  auto rep = classify_extensions(aut, L.rank(), X, mode);
  json r = classification_json(rep);
  for (const auto& f : rep.flags) flags.push_back(f);
  if (o.quotient > 0) {
    inputs["quotient"] = o.quotient;
    FiniteGroup H = finite_quotient(aut, o.quotient);
    auto fc = classify_finite(X, H, true, o.budget);
    r["finite_quotient"] = {{"group", fc.group}, {"pointed", fc.pointed}, {"free", fc.free}};
  }
  return r;
}

json cmd_homotopy(const Options& o, json& inputs, json& flags) {
  auto doc = parse_problem(problem_text(o.input));
  inputs["problem"] = lattice_inputs(doc);
  inputs["g"] = o.g;
  inputs["max"] = o.max_degree;
  auto L = problem_lattice(doc);
  SearchOptions so;
  so.bound = o.bound;
  auto out = out_rho(L, so);
  auto t = homotopy_groups(out, L.rank(), lie_descriptor(o.g, L.ambient_dim()), o.max_degree);
  json r;
  r["g"] = t.g;
  r["pi_X"] = t.classifying;
  r["pi_B"] = t.groupoid;
  json seq = json::array();
  for (const auto& n : t.sequence) seq.push_back({{"term", n.lhs}, {"maps_to", n.rhs}, {"ok", n.ok}});
  r["sequence"] = seq;
  r["sequence_exact"] = t.sequence_exact;
  for (const auto& f : t.flags) flags.push_back(f);
  return r;
}

json cmd_postnikov(const Options& o, json& inputs, json& flags) {
  auto doc = parse_problem(problem_text(o.input));
  inputs["problem"] = lattice_inputs(doc);
  inputs["g"] = o.g;
  auto L = problem_lattice(doc);
  SearchOptions so;
  so.bound = o.bound;
  auto out = out_rho(L, so);
  auto p = postnikov_report(out, L.rank(), lie_descriptor(o.g, L.ambient_dim()), center_is_discrete(L));
  for (const auto& f : p.flags) flags.push_back(f);
  return {{"g", p.g},
          {"stage1", p.stage1},
          {"stage2", p.stage2},
          {"projection_fiber", p.projection_fiber},
          {"summary", p.summary},
          {"split", p.split}};
}

json suite_json(const SuiteReport& s) {
  json checks = json::array();
  for (const auto& c : s.checks) {
    checks.push_back({{"name", c.name}, {"samples", c.samples}, {"failures", c.failures}, {"first_failure", c.first_failure}});
  }
  return {{"suite", s.suite}, {"ok", s.ok()}, {"checks", checks}};
}

json cmd_verify(const Options& o, json& inputs, bool& ok) {
  auto doc = parse_problem(problem_text(o.input));
  inputs["problem"] = lattice_inputs(doc);
  inputs["suite"] = o.suite;
  inputs["samples"] = o.samples;
  inputs["bound"] = o.bound;
  auto L = problem_lattice(doc);
  SearchOptions so;
  so.bound = o.bound;
  auto aut = aut_rho(L, so);
  json suites = json::array();
  ok = true;
  if (o.suite == "all" || o.suite == "grpd") {
    auto s = run_grpd_suite(L, aut, o.samples, o.seed);
    ok = ok && s.ok();
    suites.push_back(suite_json(s));
  }
  if (o.suite == "all" || o.suite == "sequences") {
    auto s = run_sequence_suite(L, aut, o.samples, o.seed);
    ok = ok && s.ok();
    suites.push_back(suite_json(s));
  }
  return {{"aut", aut.name}, {"suites", suites}, {"all_pass", ok}};
}

json cmd_pell(const Options& o, json& inputs) {
  auto D = parse_integer(o.d);
  if (!D) fail("BadInteger", o.d);
  inputs["d"] = int_json(*D);
  auto s = pell_fundamental_unit(*D);
  return {{"D", int_json(s.D)}, {"x", int_json(s.x)}, {"y", int_json(s.y)}, {"norm", s.norm}, {"period", s.period}};
}

std::array<long, 4> parse_matrix(const std::string& text) {
  std::array<long, 4> a{};
  std::stringstream ss(text);
  std::string part;
  std::size_t k = 0;
  while (std::getline(ss, part, ',')) {
    auto v = parse_integer(part);
    if (!v || k >= 4 || !v->fits_slong_p()) fail("BadMatrix", text);
    a[k++] = v->get_si();
  }
  if (k != 4) fail("BadMatrix", text);
  return a;
}

json cmd_carriere(const Options& o, json& inputs, json& flags) {
  std::array<long, 4> A{};
  if (!o.matrix.empty()) {
    A = parse_matrix(o.matrix);
  } else if (!o.input.empty()) {
    auto doc = parse_problem(problem_text(o.input));
    if (!doc.ga_matrix) fail("SchemaError", "/ga_matrix: required for carriere");
    A = *doc.ga_matrix;
  } else {
    fail("MissingMatrix", "carriere needs --matrix a,b,c,d or -i problem.json");
  }
  inputs["matrix"] = {A[0], A[1], A[2], A[3]};
  auto r = carriere_family(A);
  json j;
  j["disc"] = int_json(r.disc);
  j["lambda1"] = r.lambda1.pretty();
  j["lambda2"] = r.lambda2.pretty();
  j["product"] = (r.lambda1 * r.lambda2).pretty();
  j["V1"] = vector_json(r.V1);
  j["V2"] = vector_json(r.V2);
  j["left"] = vector_json(r.left);
  j["ga"] = {{"A", ga_json(r.ga_A)}, {"V1", ga_json(r.ga_V1)}, {"V2", ga_json(r.ga_V2)}};
  j["checks"] = {{"eigenvectors", r.eigen_verified},
                 {"product_is_one", r.product_is_one},
                 {"ordering", r.ordering_verified},
                 {"conjugation", r.conjugation_verified}};
  if (!o.word.empty()) {
    inputs["word"] = o.word;
    j["word"] = ga_json(ga_word_eval(r, o.word));
  }
  if (!r.conjugation_verified) flags.push_back("conjugation relations failed");
  return j;
}

json cmd_nerve(const Options& o, json& inputs) {
  if (!o.group.empty()) {
    inputs["group"] = o.group;
    inputs["action"] = o.action;
    FiniteGroup G = FiniteGroup::by_name(o.group);
    FiniteAction A;
    if (o.action == "point") {
      A = FiniteAction::point(G);
    } else if (o.action == "regular") {
      A = FiniteAction::regular(G);
    } else {
      fail("UnknownAction", o.action);
    }
    auto rep = groupoid_nerve(A);
    json comps = json::array();
    for (const auto& c : rep.components) {
      comps.push_back({{"basepoint", c.basepoint},
                       {"orbit_size", c.orbit_size},
                       {"stabilizer_order", c.stabilizer_order},
                       {"pi1", c.pi1.to_string()},
                       {"abelianization", c.abelianization},
                       {"order", c.order ? json(*c.order) : json(nullptr)},
                       {"abelianization_matches", c.abelian_match},
                       {"isomorphism_certified", c.isomorphism_certified},
                       {"certificate", c.certificate}});
    }
    return {{"group", rep.group},
            {"set_size", rep.set_size},
            {"simplices", rep.simplices},
            {"nondegenerate", rep.nondegenerate},
            {"components", comps}};
  }
  Nerve X = !o.preset.empty() ? nerve_preset(o.preset) : !o.nerve.empty() ? load_nerve(o.nerve)
                                                                           : (fail("MissingNerve", "--preset or -n required"), Nerve{});
  inputs["nerve"] = X.name();
  auto P = edge_path_group(X);
  auto S = simplify(P.group);
  return {{"name", X.name()},
          {"vertices", X.vertices().size()},
          {"edges", X.edges().size()},
          {"triangles", X.triangles().size()},
          {"tetrahedra", X.tetrahedra().size()},
          {"euler_characteristic", X.euler_characteristic()},
          {"basepoint", X.basepoint()},
          {"pi1", S.group.to_string()},
          {"pi1_abelianization", abelianization(S.group).name()},
          {"homology", {simplicial_homology(X, 0).name(), simplicial_homology(X, 1).name(), simplicial_homology(X, 2).name()}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact algebra and classification for dense subgroup groupoids", "grext"};
  app.set_version_flag("--version", kVersion);
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--bound", o.bound, "Bounded-search coefficient bound")->check(CLI::Range(1L, 64L));
  app.add_option("--budget", o.budget, "Enumeration budget (GREXT_BUDGET overrides)");
  app.add_option("--threads", o.threads, "OpenMP threads (output does not depend on it)");
  app.require_subcommand(1);
  app.fallthrough();

  auto* aut = app.add_subcommand("aut-rho", "Aut(ρ) of a lattice");
  aut->add_option("-i,--input", o.input, "problem.json or preset:NAME")->required();
  auto* cls = app.add_subcommand("classify", "Classify extensions over a nerve");
  cls->add_option("-i,--input", o.input)->required();
  cls->add_option("-n,--nerve", o.nerve, "nerve.json or preset:NAME")->required();
  cls->add_option("--mode", o.mode)->check(CLI::IsMember({"pointed-iso", "iso", "equivalence"}));
  cls->add_option("--quotient", o.quotient, "Also classify with Aut(ρ) reduced to a finite quotient");
  auto* hom = app.add_subcommand("homotopy", "Homotopy groups of the classifying spaces");
  hom->add_option("-i,--input", o.input)->required();
  hom->add_option("--g", o.g, "R, R^k, SU2 or SU2xR");
  hom->add_option("--max", o.max_degree);
  auto* post = app.add_subcommand("postnikov", "Postnikov stages");
  post->add_option("-i,--input", o.input)->required();
  post->add_option("--g", o.g);
  auto* ver = app.add_subcommand("verify", "Seeded identity suites");
  ver->add_option("-i,--input", o.input)->required();
  ver->add_option("--suite", o.suite)->check(CLI::IsMember({"all", "grpd", "sequences"}));
  ver->add_option("--samples", o.samples);
  ver->add_option("--seed", o.seed);
  auto* pell = app.add_subcommand("pell", "Fundamental solution of x² − D y² = ±1");
  pell->add_option("--d", o.d)->required();
  auto* car = app.add_subcommand("carriere", "Carrière's Γ₂ family in GA");
  car->add_option("--matrix", o.matrix, "a,b,c,d");
  car->add_option("-i,--input", o.input);
  car->add_option("--word", o.word, "e.g. \"A V1 A^-1\"");
  auto* ner = app.add_subcommand("nerve", "Nerve statistics or finite groupoid nerves");
  ner->add_option("--preset", o.preset)->check(CLI::IsMember(nerve_preset_names()));
  ner->add_option("-n,--nerve", o.nerve);
  ner->add_option("--group", o.group, "finite group name, e.g. S3");
  ner->add_option("--action", o.action, "point or regular");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  std::string command;
  auto fail_report = [&](const std::string& name, const std::string& witness, bool internal) {
    json e = {{"command", command},
              {"error", {{"name", name}, {"witness", witness}, {"class", internal ? "internal" : "input"}}},
              {"version", kVersion}};
    emit(e, o.format, out);
    err << "grext: " << name << ": " << witness << "\n";
    return internal ? 1 : 2;
  };
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail_report("UsageError", e.what(), false);
  }
  if (const char* env = std::getenv("GREXT_BUDGET")) {
    try {
      o.budget = static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      return fail_report("UsageError", std::string("GREXT_BUDGET=") + env, false);
    }
  }
  if (o.threads > 0) omp_set_num_threads(o.threads);
  command = app.get_subcommands().front()->get_name();

  json report;
  report["command"] = command;
  report["version"] = kVersion;
  json inputs = json::object();
  json flags = json::array();
  bool ok = true;
  try {
    json results;
    if (command == "aut-rho") {
      results = cmd_aut_rho(o, inputs, flags);
    } else if (command == "classify") {
      results = cmd_classify(o, inputs, flags);
    } else if (command == "homotopy") {
      results = cmd_homotopy(o, inputs, flags);
    } else if (command == "postnikov") {
      results = cmd_postnikov(o, inputs, flags);
    } else if (command == "verify") {
      results = cmd_verify(o, inputs, ok);
      report["seed"] = o.seed;
    } else if (command == "pell") {
      results = cmd_pell(o, inputs);
    } else if (command == "carriere") {
      results = cmd_carriere(o, inputs, flags);
    } else {
      results = cmd_nerve(o, inputs);
    }
    report["inputs"] = inputs;
    report["results"] = results;
    report["flags"] = flags;
  } catch (const Error& e) {
    return fail_report(e.name(), e.witness(), e.error_class() == ErrorClass::Internal);
  } catch (const std::exception& e) {
    return fail_report("InternalError", e.what(), true);
  }
  emit(report, o.format, out);
  return ok ? 0 : 1;
}

}  // namespace grext
