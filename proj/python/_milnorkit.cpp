// Python bindings. Polynomials cross the boundary as text in the CLI grammar;
// structured results come back as plain dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "milnorkit/anchors.hpp"
#include "milnorkit/deform.hpp"
#include "milnorkit/errors.hpp"
#include "milnorkit/jump_search.hpp"
#include "milnorkit/local_algebra.hpp"
#include "milnorkit/newton.hpp"

namespace py = pybind11;
using namespace milnorkit;
using Names = std::vector<std::string>;

namespace {

const Names kPlane{"x", "y"};

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object multiplicity(const Multiplicity& m) {
  if (m.is_finite()) return py::int_(m.value());
  return py::float_(std::numeric_limits<double>::infinity());
}

LocalOptions local(unsigned jet_cap, unsigned degree_cap, std::uint64_t seed) {
  LocalOptions o;
  o.jet_cap = jet_cap;
  o.degree_cap = degree_cap;
  o.seed = seed;
  return o;
}

Poly parse(const std::string& text, const Names& vars, const Names& params) {
  return parse_poly(text, make_ring(vars, params));
}

Names with_symbol(Names params, const std::string& sym) {
  if (std::find(params.begin(), params.end(), sym) == params.end()) params.push_back(sym);
  return params;
}

py::dict milnor_report_py(const std::string& poly, const Names& vars, const Names& params, const std::string& method,
                          unsigned jet_cap, unsigned degree_cap, std::uint64_t seed) {
  MilnorReport rep = milnor_report(parse(poly, vars, params), parse_method(method), local(jet_cap, degree_cap, seed));
  py::dict per;
  for (const auto& [name, m] : rep.per_method) per[py::str(name)] = multiplicity(m);
  py::dict out;
  out["value"] = multiplicity(rep.value);
  out["method"] = method;
  out["per_method"] = per;
  out["jet_cap_used"] = rep.jet_cap_used;
  return out;
}

py::dict reduce_py(const std::string& g, const std::string& germ, const std::string& ideal, bool certificate,
                   const Names& vars, const Names& params, unsigned degree_cap) {
  RingPtr ring = make_ring(vars, params);
  Poly f = parse_poly(germ, ring);
  IdealGens gens = ideal == "jacobian"     ? IdealGens::jacobian(f)
                   : ideal == "m-jacobian" ? IdealGens::maximal_times_jacobian(f)
                                           : throw Error(ErrorKind::SyntaxError, "unknown ideal '" + ideal + "'");
  StandardBasis basis = standard_basis(gens, degree_cap);
  Reduction red = local_reduce(parse_poly(g, ring), basis, certificate);
  py::dict out;
  out["normal_form"] = red.normal_form.to_string();
  out["member"] = red.normal_form.is_zero();
  py::list elems;
  for (const auto& e : basis.elements) elems.append(e.to_string());
  out["basis"] = elems;
  if (certificate) {
    py::list cof;
    for (const auto& p : red.cofactors) cof.append(p.to_string());
    out["cofactors"] = cof;
    out["cap"] = red.cap;
  }
  return out;
}

py::dict jump_py(const std::string& base, const std::string& total, const std::string& sym, bool sampled,
                 const std::optional<std::vector<std::string>>& samples, const Names& vars, const Names& params,
                 unsigned jet_cap, unsigned degree_cap) {
  RingPtr ring = make_ring(vars, with_symbol(params, sym));
  LocalOptions lo = local(jet_cap, degree_cap, 0);
  Family fam = make_family(parse_poly(total, ring), parse_poly(base, ring), sym, lo);
  GenericMuOptions g;
  g.mode = sampled ? GenericMode::sampled : GenericMode::symbolic;
  g.local = lo;
  if (samples) {
    g.samples.clear();
    for (const auto& s : *samples) g.samples.push_back(parse_scalar(s, {}).rational());
  }
  JumpReport rep = family_jump(fam, g);
  py::dict out;
  out["mu_base"] = rep.mu_base;
  out["mu_generic"] = rep.mu_generic.value;
  out["jump"] = rep.jump;
  out["mode"] = std::string(mode_name(rep.mode));
  if (sampled) {
    py::list sv;
    for (const auto& s : rep.mu_generic.samples) sv.append(py::make_tuple(s.s.get_str(), multiplicity(s.mu)));
    out["samples"] = sv;
  }
  return out;
}

py::dict search_py(const std::string& base, const std::string& grid_toml, const Names& vars, const Names& params,
                   const std::string& sym, std::size_t budget, unsigned workers, const std::optional<std::string>& cache,
                   bool records) {
  RingPtr ring = make_ring(vars, params);
  Poly f0 = parse_poly(base, ring);
  SearchGrid grid = parse_grid_toml(grid_toml, ring);
  std::optional<ResultCache> store;
  if (cache) store.emplace(*cache);
  SearchOptions so;
  so.symbol = sym;
  so.budget = budget;
  so.workers = workers;
  so.cache = store ? &*store : nullptr;
  SearchResult res;
  {
    py::gil_scoped_release release;
    res = search_min_jump(f0, grid, so);
  }
  py::dict hist;
  for (const auto& [j, n] : res.histogram) hist[py::int_(j)] = n;
  py::dict out;
  out["mu_base"] = res.mu_base;
  out["enumeration_size"] = res.enumeration_size;
  out["min_nonzero_jump"] = res.min_nonzero_jump ? py::object(py::int_(*res.min_nonzero_jump)) : py::none();
  out["witness"] = res.witness ? to_python(res.witness->to_json()) : py::none();
  out["histogram"] = hist;
  out["errors"] = res.errors;
  out["cache_hits"] = res.cache_hits;
  if (records) {
    py::list recs;
    for (const auto& r : res.records) recs.append(to_python(r.to_json()));
    out["records"] = recs;
  }
  return out;
}

py::list verify_py(const std::string& only, unsigned jet_cap, unsigned degree_cap) {
  AnchorOptions opt;
  opt.only = only;
  opt.local = local(jet_cap, degree_cap, 0);
  py::list out;
  for (const auto& r : run_anchors(opt)) {
    py::dict d;
    d["id"] = r.id;
    d["tag"] = r.tag;
    d["location"] = r.location;
    d["claim"] = r.claim;
    d["passed"] = r.passed;
    d["detail"] = r.detail;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_milnorkit, m) {
  m.doc() = "Milnor numbers, Newton polygons and jumps of plane germs";

  static py::exception<Error> error_type(m, "MilnorError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(py::str(e.what()));
      inst.attr("kind") = py::str(std::string(e.kind_name()));
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  m.def(
      "milnor",
      [](const std::string& poly, const Names& vars, const Names& params, const std::string& method, unsigned jet_cap,
         unsigned degree_cap, std::uint64_t seed) -> py::object {
        MilnorReport rep =
            milnor_report(parse(poly, vars, params), parse_method(method), local(jet_cap, degree_cap, seed));
        return multiplicity(rep.value);
      },
      py::arg("poly"), py::kw_only(), py::arg("vars") = kPlane, py::arg("params") = Names{},
      py::arg("method") = "standard_basis", py::arg("jet_cap") = 40u, py::arg("degree_cap") = 64u,
      py::arg("seed") = 0u, "Milnor number; math.inf for a non-isolated critical point.");
  m.def("milnor_report", &milnor_report_py, py::arg("poly"), py::kw_only(), py::arg("vars") = kPlane,
        py::arg("params") = Names{}, py::arg("method") = "all", py::arg("jet_cap") = 40u,
        py::arg("degree_cap") = 64u, py::arg("seed") = 0u);
  m.def(
      "colength",
      [](const std::vector<std::string>& gens, const Names& vars, const Names& params, unsigned degree_cap) {
        RingPtr ring = make_ring(vars, params);
        std::vector<Poly> polys;
        for (const auto& g : gens) polys.push_back(parse_poly(g, ring));
        LocalOptions o;
        o.degree_cap = degree_cap;
        return multiplicity(colength(IdealGens(polys), o));
      },
      py::arg("generators"), py::kw_only(), py::arg("vars") = kPlane, py::arg("params") = Names{},
      py::arg("degree_cap") = 64u, "Dimension of the local quotient by the ideal.");
  m.def(
      "newton",
      [](const std::string& poly, const Names& params) { return to_python(polygon_report(parse(poly, kPlane, params))); },
      py::arg("poly"), py::kw_only(), py::arg("params") = Names{}, "Newton polygon report of a plane germ.");
  m.def(
      "newton_number", [](const std::string& poly, const Names& params) { return newton_number(parse(poly, kPlane, params)); },
      py::arg("poly"), py::kw_only(), py::arg("params") = Names{});
  m.def(
      "nondegenerate",
      [](const std::string& poly, const Names& params) { return nondegenerate(parse(poly, kPlane, params)); },
      py::arg("poly"), py::kw_only(), py::arg("params") = Names{});
  m.def(
      "render_svg",
      [](const std::string& poly, const Names& params) {
        Poly f = parse(poly, kPlane, params);
        return polygon_svg(newton_polygon(f), plane_support(f));
      },
      py::arg("poly"), py::kw_only(), py::arg("params") = Names{}, "Standalone SVG of the Newton diagram.");
  m.def(
      "versal_basis",
      [](const std::string& poly, const Names& vars, const Names& params) {
        Poly f = parse(poly, vars, params);
        std::vector<std::string> out;
        for (const auto& e : versal_basis(f)) out.push_back(monomial_to_string(e, f.ring()));
        return out;
      },
      py::arg("poly"), py::kw_only(), py::arg("vars") = kPlane, py::arg("params") = Names{},
      "Monomials whose classes span m / m(grad f).");
  m.def("reduce", &reduce_py, py::arg("g"), py::kw_only(), py::arg("germ"), py::arg("ideal") = "jacobian",
        py::arg("certificate") = false, py::arg("vars") = kPlane, py::arg("params") = Names{},
        py::arg("degree_cap") = 64u, "Normal form of g modulo the (m-)Jacobian ideal of the germ.");
  m.def("jump", &jump_py, py::kw_only(), py::arg("base"), py::arg("total"), py::arg("sym") = "s",
        py::arg("sampled") = false, py::arg("samples") = py::none(), py::arg("vars") = kPlane,
        py::arg("params") = Names{}, py::arg("jet_cap") = 40u, py::arg("degree_cap") = 64u,
        "Jump mu(base) - mu(generic fibre) of a one-parameter deformation.");
  m.def(
      "suspend",
      [](const std::string& poly, std::size_t k, const Names& vars, const Names& params) {
        Poly s = suspend(parse(poly, vars, params), k);
        return py::make_tuple(s.to_string(), s.ring().vars);
      },
      py::arg("poly"), py::arg("k") = 1, py::kw_only(), py::arg("vars") = kPlane, py::arg("params") = Names{},
      "f + z_1^2 + ... + z_k^2 as (text, variables).");
  m.def("search", &search_py, py::arg("base"), py::kw_only(), py::arg("grid"), py::arg("vars") = kPlane,
        py::arg("params") = Names{}, py::arg("sym") = "s", py::arg("budget") = 10000, py::arg("workers") = 1u,
        py::arg("cache") = py::none(), py::arg("records") = false,
        "Smallest nonzero jump over a grid given as TOML text.");
  m.def("verify_paper", &verify_py, py::kw_only(), py::arg("only") = "", py::arg("jet_cap") = 40u,
        py::arg("degree_cap") = 64u, "Runs the anchor checks; one dict per check.");
}
