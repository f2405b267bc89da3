// milnorkit command-line front end. Results go to stdout as JSON, diagnostics
// to stderr. Exit status: 0 success, 1 computation error, 2 usage error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11/CLI11.hpp>
#include <nlohmann/json.hpp>

#include "milnorkit/anchors.hpp"
#include "milnorkit/deform.hpp"
#include "milnorkit/errors.hpp"
#include "milnorkit/jump_search.hpp"
#include "milnorkit/local_algebra.hpp"
#include "milnorkit/mpoly.hpp"
#include "milnorkit/newton.hpp"

#ifndef MILNORKIT_VERSION
#define MILNORKIT_VERSION "unknown"
#endif

using nlohmann::json;
using namespace milnorkit;

namespace {

constexpr const char* kSchemaVersion = "1.0";

constexpr const char* kGrammar =
    "polynomial grammar: terms joined by + or -, a term is coeff, coeff*mono or mono,\n"
    "mono is x, x^k or a product joined by *; coefficients are integers, p/q or\n"
    "declared parameters (--params a,b); parentheses and integer powers allowed.\n";

struct Config {
  std::string vars = "x,y";
  std::string params;
  std::string sym = "s";
  std::string method = "standard_basis";
  unsigned jet_cap = 40;
  unsigned degree_cap = 64;
  std::uint64_t seed = 0;
  std::string cache;
  unsigned workers = 1;
  bool sampled = false;
  bool timing = false;
};

struct Args {
  std::string poly;
  std::string base;
  std::string total;
  std::string germ;
  std::string ideal = "jacobian";
  std::string grid;
  std::string svg;
  std::string only;
  std::string samples;
  unsigned make_convenient = 0;
  std::size_t budget = 10000;
  bool certificate = false;
  bool records = false;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

LocalOptions local_options(const Config& c) {
  LocalOptions o;
  o.degree_cap = c.degree_cap;
  o.jet_cap = c.jet_cap;
  o.seed = c.seed;
  return o;
}

RingPtr ring_of(const Config& c, bool with_symbol = false) {
  auto params = split_list(c.params);
  if (with_symbol && std::find(params.begin(), params.end(), c.sym) == params.end()) params.push_back(c.sym);
  return make_ring(split_list(c.vars), params);
}

json multiplicity_json(const Multiplicity& m) { return m.is_finite() ? json(m.value()) : json("infinity"); }

json exps_json(const ExpVec& e, const Ring& ring) {
  json ex = json::array();
  for (std::size_t i = 0; i < ring.arity(); ++i) ex.push_back(e[i]);
  return {{"monomial", monomial_to_string(e, ring)}, {"exps", ex}};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw Error(ErrorKind::IoError, "cannot write " + path);
}

Poly with_convenience(Poly f, unsigned n) {
  if (n == 0) return f;
  if (f.ring().arity() != 2) throw Error(ErrorKind::ArityUnsupported, "--make-convenient needs a plane germ");
  f.add_term(ExpVec::unit(0, static_cast<std::uint16_t>(n)), ParamRatio(1L));
  f.add_term(ExpVec::unit(1, static_cast<std::uint16_t>(n)), ParamRatio(1L));
  return f;
}

json cmd_mu(const Config& c, const Args& a) {
  Poly f = parse_poly(a.poly, ring_of(c));
  MilnorReport rep = milnor_report(f, parse_method(c.method), local_options(c));
  json out{{"value", multiplicity_json(rep.value)}, {"method", c.method}};
  json per = json::object();
  for (const auto& [name, m] : rep.per_method) per[name] = multiplicity_json(m);
  out["per_method"] = per;
  out["cap_used"] = {{"degree_cap", c.degree_cap}, {"jet_cap", rep.jet_cap_used}};
  return out;
}

json cmd_newton(const Config& c, const Args& a) {
  Poly f = with_convenience(parse_poly(a.poly, ring_of(c)), a.make_convenient);
  NewtonPolygon p = newton_polygon(f);
  if (!p.convenient()) newton_number(p);  // throws NotConvenient
  json out = polygon_report(f);
  if (a.make_convenient) out["made_convenient"] = a.make_convenient;
  if (!a.svg.empty()) {
    write_file(a.svg, polygon_svg(p, plane_support(f)));
    out["svg"] = a.svg;
  }
  return out;
}

json cmd_nondeg(const Config& c, const Args& a) {
  json rep = polygon_report(parse_poly(a.poly, ring_of(c)));
  return {{"nondegenerate", rep["nondegenerate"]}, {"segments", rep["segments"]}, {"per_segment", rep["per_segment"]}};
}

json cmd_versal(const Config& c, const Args& a) {
  Poly f = parse_poly(a.poly, ring_of(c));
  auto basis = versal_basis(f, local_options(c));
  json list = json::array();
  for (const auto& e : basis) list.push_back(exps_json(e, f.ring()));
  return {{"basis", list}, {"size", basis.size()}, {"mu", basis.size() + 1 - f.ring().arity()}};
}

json cmd_reduce(const Config& c, const Args& a) {
  RingPtr ring = ring_of(c);
  Poly g = parse_poly(a.poly, ring);
  Poly f = parse_poly(a.germ, ring);
  IdealGens ideal = a.ideal == "jacobian"     ? IdealGens::jacobian(f)
                    : a.ideal == "m-jacobian" ? IdealGens::maximal_times_jacobian(f)
                                              : throw Error(ErrorKind::SyntaxError,
                                                            "unknown ideal '" + a.ideal +
                                                                "' (expected jacobian or m-jacobian)");
  StandardBasis basis = standard_basis(ideal, c.degree_cap);
  Reduction red = local_reduce(g, basis, a.certificate);
  json out{{"normal_form", red.normal_form.to_string()}, {"member", red.normal_form.is_zero()}, {"ideal", a.ideal}};
  json elems = json::array();
  for (const auto& e : basis.elements) elems.push_back(e.to_string());
  out["basis"] = elems;
  if (a.certificate) {
    json cof = json::array();
    for (const auto& p : red.cofactors) cof.push_back(p.to_string());
    out["certificate"] = {{"cofactors", cof}, {"cap", red.cap}};
  }
  return out;
}

GenericMuOptions generic_options(const Config& c, const Args& a) {
  GenericMuOptions g;
  g.mode = c.sampled ? GenericMode::sampled : GenericMode::symbolic;
  if (!a.samples.empty()) {
    g.samples.clear();
    for (const auto& s : split_list(a.samples)) g.samples.push_back(parse_rational(s));
  }
  g.local = local_options(c);
  return g;
}

json cmd_jump(const Config& c, const Args& a) {
  RingPtr ring = ring_of(c, true);
  Family fam = make_family(parse_poly(a.total, ring), parse_poly(a.base, ring), c.sym, local_options(c));
  JumpReport rep = family_jump(fam, generic_options(c, a));
  json out{{"mu_base", rep.mu_base},
           {"mu_generic", rep.mu_generic.value},
           {"jump", rep.jump},
           {"mode", mode_name(rep.mode)}};
  if (rep.mode == GenericMode::sampled) {
    json samples = json::array();
    for (const auto& sv : rep.mu_generic.samples)
      samples.push_back({{"s", to_string(sv.s)}, {"mu", multiplicity_json(sv.mu)}});
    out["samples"] = samples;
  }
  return out;
}

json cmd_search(const Config& c, const Args& a) {
  RingPtr ring = ring_of(c);
  Poly f0 = parse_poly(a.poly, ring);
  std::ifstream in(a.grid);
  if (!in) throw Error(ErrorKind::IoError, "cannot read grid file " + a.grid);
  std::stringstream text;
  text << in.rdbuf();
  SearchGrid grid = parse_grid_toml(text.str(), ring);

  std::optional<ResultCache> cache;
  if (!c.cache.empty()) {
    cache.emplace(c.cache);
    if (cache->corrupt_lines()) std::cerr << "warning: skipped " << cache->corrupt_lines() << " corrupt cache lines\n";
  }
  SearchOptions so;
  so.symbol = c.sym;
  so.budget = a.budget;
  so.workers = c.workers;
  so.local = local_options(c);
  so.cache = cache ? &*cache : nullptr;
  SearchResult res = search_min_jump(f0, grid, so);

  json hist = json::object();
  for (const auto& [j, n] : res.histogram) hist[std::to_string(j)] = n;
  json out{{"mu_base", res.mu_base},
           {"enumeration_size", res.enumeration_size},
           {"min_nonzero_jump", res.min_nonzero_jump ? json(*res.min_nonzero_jump) : json(nullptr)},
           {"witness", res.witness ? res.witness->to_json() : json(nullptr)},
           {"histogram", hist},
           {"errors", res.errors},
           {"cache_hits", res.cache_hits}};
  if (a.records) {
    json recs = json::array();
    for (const auto& r : res.records) recs.push_back(r.to_json());
    out["records"] = recs;
  }
  return out;
}

json cmd_render(const Config& c, const Args& a) {
  Poly f = with_convenience(parse_poly(a.poly, ring_of(c)), a.make_convenient);
  NewtonPolygon p = newton_polygon(f);
  std::string svg = polygon_svg(p, plane_support(f));
  json verts = json::array();
  for (const auto& v : p.vertices) verts.push_back({v.i, v.j});
  json out{{"vertices", verts}};
  if (a.svg.empty()) {
    out["svg_document"] = svg;
  } else {
    write_file(a.svg, svg);
    out["svg"] = a.svg;
  }
  return out;
}

json cmd_verify(const Config& c, const Args& a, bool& all_passed) {
  AnchorOptions opts;
  opts.local = local_options(c);
  opts.only = a.only;
  auto results = run_anchors(opts);

  json checks = json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    json j{{"id", r.id},         {"tag", r.tag},       {"location", r.location},
           {"claim", r.claim},   {"passed", r.passed}, {"detail", r.detail}};
    if (c.timing) j["elapsed_ms"] = r.elapsed_ms;
    checks.push_back(j);
    passed += r.passed;
  }
  all_passed = passed == results.size();

  std::cerr << std::left << std::setw(6) << "" << std::setw(24) << "check" << "location\n";
  for (const auto& r : results)
    std::cerr << std::setw(6) << (r.passed ? "PASS" : "FAIL") << std::setw(24) << r.id << r.location
              << (r.passed ? "" : "\n      " + r.detail) << "\n";
  std::cerr << passed << "/" << results.size() << " checks passed\n";

  return {{"checks", checks}, {"passed", passed}, {"failed", results.size() - passed}, {"all_passed", all_passed}};
}

json config_json(const Config& c) {
  return {{"vars", split_list(c.vars)}, {"params", split_list(c.params)}, {"sym", c.sym},
          {"method", c.method},         {"jet_cap", c.jet_cap},         {"degree_cap", c.degree_cap},
          {"seed", c.seed},             {"sampled", c.sampled}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local invariants of plane and low-dimensional hypersurface germs", "milnorkit"};
  app.set_version_flag("--version", MILNORKIT_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(kGrammar);

  Config c;
  Args a;
  app.add_option("--vars", c.vars, "comma-separated main variables")->envname("MILNORKIT_VARS")->capture_default_str();
  app.add_option("--params", c.params, "comma-separated parameter symbols")->envname("MILNORKIT_PARAMS");
  app.add_option("--sym", c.sym, "deformation symbol")->envname("MILNORKIT_SYM")->capture_default_str();
  app.add_option("--method", c.method, "standard_basis, jets, resultant or all")
      ->envname("MILNORKIT_METHOD")
      ->capture_default_str();
  app.add_option("--jet-cap", c.jet_cap, "largest jet truncation degree")
      ->envname("MILNORKIT_JET_CAP")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--degree-cap", c.degree_cap, "standard basis degree cap")
      ->envname("MILNORKIT_DEGREE_CAP")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", c.seed, "seed for random coordinate changes")
      ->envname("MILNORKIT_SEED")
      ->capture_default_str();
  app.add_option("--cache", c.cache, "JSON-lines result cache for search")->envname("MILNORKIT_CACHE");
  app.add_option("--workers", c.workers, "worker threads for search")
      ->envname("MILNORKIT_WORKERS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--sampled", c.sampled, "generic mu by sampling s instead of symbolically");
  app.add_flag("--timing", c.timing, "add elapsed_ms to the report");

  auto* mu = app.add_subcommand("mu", "Milnor number");
  mu->add_option("poly", a.poly, "germ")->required();

  auto* newton = app.add_subcommand("newton", "Newton polygon, Newton number and non-degeneracy");
  newton->add_option("poly", a.poly, "plane germ")->required();
  newton->add_option("--make-convenient", a.make_convenient, "add x^N + y^N first (extension)");
  newton->add_option("--svg", a.svg, "also write the polygon picture here");

  auto* nondeg = app.add_subcommand("nondeg", "Kouchnirenko non-degeneracy per segment");
  nondeg->add_option("poly", a.poly, "plane germ")->required();

  auto* versal = app.add_subcommand("versal", "monomial basis of m / m(grad f)");
  versal->add_option("poly", a.poly, "germ")->required();

  auto* reduce = app.add_subcommand("reduce", "normal form modulo a Jacobian ideal");
  reduce->add_option("poly", a.poly, "polynomial to reduce")->required();
  reduce->add_option("--germ", a.germ, "germ f whose Jacobian ideal is used")->required();
  reduce->add_option("--ideal", a.ideal, "jacobian or m-jacobian")->capture_default_str();
  reduce->add_flag("--certificate", a.certificate, "emit cofactors on the standard basis");

  auto* jump = app.add_subcommand("jump", "jump of a one-parameter deformation");
  jump->add_option("--base", a.base, "special fibre f0")->required();
  jump->add_option("--total", a.total, "family f(s, z)")->required();
  jump->add_option("--samples", a.samples, "sample values of s for --sampled");

  auto* search = app.add_subcommand("search", "smallest nonzero jump over a grid of deformations");
  search->add_option("poly", a.poly, "base germ")->required();
  search->add_option("--grid", a.grid, "grid TOML file")->required()->check(CLI::ExistingFile);
  search->add_option("--budget", a.budget, "refuse grids larger than this")->capture_default_str();
  search->add_flag("--records", a.records, "include every record in the report");

  auto* render = app.add_subcommand("render", "SVG picture of the Newton polygon");
  render->add_option("poly", a.poly, "plane germ")->required();
  render->add_option("--svg", a.svg, "output file (embedded in the report when omitted)");
  render->add_option("--make-convenient", a.make_convenient, "add x^N + y^N first (extension)");

  auto* verify = app.add_subcommand("verify-paper", "run the reference checks for the X9 and W1,0 families");
  verify->add_option("--only", a.only, "restrict to one tag: X9, W10, SUSP, SEARCH");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  json report{{"schema_version", kSchemaVersion},
              {"tool", {{"name", "milnorkit"}, {"version", MILNORKIT_VERSION}}},
              {"command", {{"name", sub->get_name()}, {"options", config_json(c)}}}};
  if (!a.poly.empty()) report["command"]["input"] = a.poly;
  if (!a.base.empty()) report["command"]["base"] = a.base;
  if (!a.total.empty()) report["command"]["total"] = a.total;

  auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    bool all_passed = true;
    if (sub == mu) report["result"] = cmd_mu(c, a);
    else if (sub == newton) report["result"] = cmd_newton(c, a);
    else if (sub == nondeg) report["result"] = cmd_nondeg(c, a);
    else if (sub == versal) report["result"] = cmd_versal(c, a);
    else if (sub == reduce) report["result"] = cmd_reduce(c, a);
    else if (sub == jump) report["result"] = cmd_jump(c, a);
    else if (sub == search) report["result"] = cmd_search(c, a);
    else if (sub == render) report["result"] = cmd_render(c, a);
    else report["result"] = cmd_verify(c, a, all_passed);
    code = all_passed ? 0 : 1;
  } catch (const Error& e) {
    report["error"] = {{"kind", e.kind_name()}, {"message", e.what()}};
    std::cerr << "error: " << e.kind_name() << ": " << e.what() << "\n";
    code = is_input_error(e.kind()) ? 2 : 1;
    if (code == 2 && e.kind() != ErrorKind::InvalidGrid) std::cerr << kGrammar;
  } catch (const std::exception& e) {
    report["error"] = {{"kind", "InternalError"}, {"message", e.what()}};
    std::cerr << "internal error: " << e.what() << "\n";
    code = 1;
  }
  if (c.timing)
    report["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << report.dump(2) << "\n";
  return code;
}
