#include "milnorkit/anchors.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "milnorkit/deform.hpp"
#include "milnorkit/errors.hpp"
#include "milnorkit/jump_search.hpp"
#include "milnorkit/newton.hpp"

namespace milnorkit {
namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

struct Anchor {
  const char* id;
  const char* tag;
  const char* location;
  const char* claim;
  std::function<Outcome(const LocalOptions&)> run;
};

// Accumulates "name=value" observations and the overall verdict.
class Tally {
 public:
  template <class A, class B>
  void expect(const std::string& name, const A& got, const B& want) {
    bool ok = got == want;
    passed_ = passed_ && ok;
    out_ << (out_.tellp() > 0 ? "; " : "") << name << "=" << show(got) << (ok ? "" : " (expected " + show(want) + ")");
  }
  void require(const std::string& name, bool ok) {
    passed_ = passed_ && ok;
    out_ << (out_.tellp() > 0 ? "; " : "") << name << (ok ? " ok" : " FAILED");
  }
  Outcome done() const { return {passed_, out_.str()}; }

 private:
  static std::string show(const Poly& p) { return p.to_string(); }
  static std::string show(const Multiplicity& m) { return m.to_string(); }
  static std::string show(bool b) { return b ? "true" : "false"; }
  template <class T>
  static std::string show(const T& v) {
    if constexpr (std::is_arithmetic_v<T>) return std::to_string(v);
    else return std::string(v);
  }

  std::ostringstream out_;
  bool passed_ = true;
};

RingPtr ring_xy(std::vector<std::string> params) { return make_ring({"x", "y"}, std::move(params)); }

Poly x9_germ(const RingPtr& r) { return parse_poly("x^4+y^4+a*x^2*y^2", r); }

Segment segment(int pi, int pj, int qi, int qj) { return Segment{{pi, pj}, {qi, qj}}; }

// g - sum c_i b_i - nf must vanish below the certificate cap.
bool recombines(const Poly& g, const StandardBasis& basis, const Reduction& red) {
  Poly rest = g - red.normal_form;
  for (std::size_t i = 0; i < basis.elements.size(); ++i) rest -= red.cofactors[i] * basis.elements[i];
  return rest.truncated(red.cap).is_zero();
}

Multiplicity mu_at(const Poly& f, const std::map<std::string, Rational>& at, MilnorMethod m, const LocalOptions& opt) {
  return milnor(specialize_params(f, at), m, opt);
}

SearchGrid grid(const RingPtr& r, const std::vector<std::string>& dirs, std::vector<long> coeffs,
                std::vector<unsigned> weights, std::size_t max_active) {
  SearchGrid g;
  for (const auto& d : dirs) g.directions.push_back(parse_poly(d, r).terms().begin()->first);
  for (long c : coeffs) g.coefficients.emplace_back(c);
  g.weights = std::move(weights);
  g.max_active = max_active;
  return g;
}

const std::vector<Anchor>& anchors() {
  static const std::vector<Anchor> list = {
      {"x9.gradient", "X9", "X9 lemma, proof: the gradient", "grad(x^4+y^4+a x^2y^2) = (4x^3+2axy^2, 4y^3+2ax^2y)",
       [](const LocalOptions&) {
         auto r = ring_xy({"a"});
         Tally t;
         t.expect("f_x", partial(x9_germ(r), "x"), parse_poly("4*x^3+2*a*x*y^2", r));
         t.expect("f_y", partial(x9_germ(r), "y"), parse_poly("4*y^3+2*a*x^2*y", r));
         return t.done();
       }},
      {"x9.mu", "X9", "X9 class: Milnor number of the normal form", "mu(x^4+y^4+a x^2y^2) = 9 for generic a",
       [](const LocalOptions& opt) {
         Tally t;
         t.expect("mu", milnor(x9_germ(ring_xy({"a"})), MilnorMethod::standard_basis, opt), Multiplicity(9));
         return t.done();
       }},
      {"x9.mu_oracles", "X9", "X9 class: Milnor number of the normal form",
       "jets and resultant give 9 at a = 1 and a = 3",
       [](const LocalOptions& opt) {
         auto f = x9_germ(ring_xy({"a"}));
         Tally t;
         for (long a : {1L, 3L}) {
           std::string at = "a=" + std::to_string(a);
           t.expect("jets@" + at, mu_at(f, {{"a", Rational(a)}}, MilnorMethod::jets, opt), Multiplicity(9));
           t.expect("resultant@" + at, mu_at(f, {{"a", Rational(a)}}, MilnorMethod::resultant, opt), Multiplicity(9));
         }
         return t.done();
       }},
      {"x9.versal_basis", "X9", "X9 versal basis lemma: statement and dimension count",
       "x^i y^j with 0 < i+j <= 3 plus x^2y^2 span m/m(grad f); dim = mu + 1 = 10",
       [](const LocalOptions& opt) {
         auto r = ring_xy({"a"});
         auto f = x9_germ(r);
         std::set<ExpVec> got;
         for (const auto& e : versal_basis(f, opt)) got.insert(e);
         std::set<ExpVec> want;
         for (const char* m : {"x", "y", "x^2", "x*y", "y^2", "x^3", "x^2*y", "x*y^2", "y^3", "x^2*y^2"})
           want.insert(parse_poly(m, r).terms().begin()->first);
         Tally t;
         t.require("basis", got == want);
         t.expect("size", got.size(), std::size_t{10});
         t.expect("colength(m grad f)", colength(IdealGens::maximal_times_jacobian(f), opt), Multiplicity(11));
         return t.done();
       }},
      {"x9.cofactors", "X9", "X9 versal basis lemma, proof: explicit identities",
       "the printed cofactor identities for x^5 and x^3y hold exactly",
       [](const LocalOptions&) {
         auto r = ring_xy({"a"});
         auto f = x9_germ(r);
         Poly fx = partial(f, "x"), fy = partial(f, "y");
         Tally t;
         t.expect("x^5", parse_poly("x^2/4 + 2*a*y^2/(4*(a^2-4))", r) * fx +
                             parse_poly("-a^2*x*y/(4*(a^2-4))", r) * fy,
                  parse_poly("x^5", r));
         t.expect("x^3y", parse_poly("-y/(a^2-4)", r) * fx + parse_poly("a*x/(2*(a^2-4))", r) * fy,
                  parse_poly("x^3*y", r));
         return t.done();
       }},
      {"x9.membership", "X9", "X9 versal basis lemma, proof: membership in m(grad f)",
       "x^5, x^3y, y^5, xy^3 reduce to 0 with recombining cofactors",
       [](const LocalOptions& opt) {
         auto r = ring_xy({"a"});
         auto basis = standard_basis(IdealGens::maximal_times_jacobian(x9_germ(r)), opt.degree_cap);
         Tally t;
         for (const char* m : {"x^5", "x^3*y", "y^5", "x*y^3"}) {
           Poly g = parse_poly(m, r);
           Reduction red = local_reduce(g, basis, true);
           t.expect(std::string("NF(") + m + ")", red.normal_form, Poly(r));
           t.require(std::string("certificate(") + m + ")", recombines(g, basis, red));
         }
         return t.done();
       }},
      {"x9.congruence", "X9", "X9 versal basis lemma, proof: quartic congruences",
       "x^4 and y^4 are congruent to -(a/2) x^2y^2 modulo m(grad f)",
       [](const LocalOptions& opt) {
         auto r = ring_xy({"a"});
         auto basis = standard_basis(IdealGens::maximal_times_jacobian(x9_germ(r)), opt.degree_cap);
         Poly want = parse_poly("-a/2*x^2*y^2", r);
         Tally t;
         for (const char* m : {"x^4", "y^4"}) {
           Poly g = parse_poly(m, r);
           Reduction red = local_reduce(g, basis, true);
           t.expect(std::string("NF(") + m + ")", red.normal_form, want);
           t.require(std::string("certificate(") + m + ")", recombines(g, basis, red));
         }
         return t.done();
       }},
      {"x9.order", "X9", "X9 theorem, proof: order cases", "ord(x^3+x^4+y^4) = 3",
       [](const LocalOptions&) {
         Tally t;
         t.expect("ord", *parse_poly("x^3+x^4+y^4", ring_xy({})).order(), 3u);
         return t.done();
       }},
      {"x9.coordinate_change", "X9", "X9 theorem, proof: coordinate change",
       "x -> x - sy^2, y -> sy turns the deformation into the printed f-bar",
       [](const LocalOptions&) {
         auto r = ring_xy({"a", "s"});
         Poly fs = parse_poly("x^4+(y^2+s*x)^2+a*x^2*(y^2+s*x)", r);
         Poly bar = substitute(fs, {{"x", parse_poly("x-s*y^2", r)}, {"y", parse_poly("s*y", r)}});
         Tally t;
         t.expect("f-bar", bar,
                  parse_poly("s^2*x^2+a*s^3*x*y^4+s^4*y^8+a*s*x^3+x^4-2*a*s^2*x^2*y^2-4*s*x^3*y^2"
                             "+6*s^2*x^2*y^4-4*s^3*x*y^6",
                             r));
         return t.done();
       }},
      {"x9.newton", "X9", "X9 theorem, proof: Newton data of f-bar",
       "f-bar has face s^2x^2+as^3xy^4+s^4y^8, is non-degenerate, nu = mu = 7",
       [](const LocalOptions& opt) {
         auto r = ring_xy({"a", "s"});
         Poly fs = parse_poly("x^4+(y^2+s*x)^2+a*x^2*(y^2+s*x)", r);
         Poly bar = substitute(fs, {{"x", parse_poly("x-s*y^2", r)}, {"y", parse_poly("s*y", r)}});
         Tally t;
         t.expect("face", face_poly(bar, segment(0, 8, 2, 0)), parse_poly("s^2*x^2+a*s^3*x*y^4+s^4*y^8", r));
         t.expect("nondegenerate", nondegenerate(bar), true);
         t.expect("nu", newton_number(bar), 7L);
         t.expect("mu", milnor(bar, MilnorMethod::standard_basis, opt), Multiplicity(7));
         return t.done();
       }},
      {"x9.jump", "X9", "X9 theorem, proof: jump of the deformation",
       "mu(f_s) = 7 for s != 0, so the deformation has jump 2",
       [](const LocalOptions& opt) {
         auto r = ring_xy({"a", "s"});
         Family fam = make_family(parse_poly("x^4+(y^2+s*x)^2+a*x^2*(y^2+s*x)", r), x9_germ(r), "s", opt);
         GenericMuOptions gopt;
         gopt.local = opt;
         JumpReport rep = family_jump(fam, gopt);
         Tally t;
         t.expect("mu_base", rep.mu_base, std::size_t{9});
         t.expect("mu_generic", rep.mu_generic.value, std::size_t{7});
         t.expect("jump", rep.jump, std::size_t{2});
         return t.done();
       }},
      {"w10.base", "W10", "W1,0 proposition, proof: the base germ",
       "x^4+y^6+bx^2y^4 is non-degenerate with mu = nu = 15",
       [](const LocalOptions& opt) {
         Poly f = parse_poly("x^4+y^6+b*x^2*y^4", ring_xy({"b"}));
         Tally t;
         t.expect("nondegenerate", nondegenerate(f), true);
         t.expect("nu", newton_number(f), 15L);
         t.expect("mu", milnor(f, MilnorMethod::standard_basis, opt), Multiplicity(15));
         return t.done();
       }},
      {"w10.coordinate_change", "W10", "W1,0 proposition, proof: coordinate change",
       "x -> x - sy^2, y -> sy turns the deformation into the printed f-bar",
       [](const LocalOptions&) {
         auto r = ring_xy({"b", "s"});
         Poly fs = parse_poly("x^4+(y^2+s*x)^3+b*x^2*y^4", r);
         Poly bar = substitute(fs, {{"x", parse_poly("x-s*y^2", r)}, {"y", parse_poly("s*y", r)}});
         Tally t;
         t.expect("f-bar", bar,
                  parse_poly("s^3*x^3+(s^4+b*s^6)*y^8+x^4-4*s*x^3*y^2+(6*s^2+b*s^4)*x^2*y^4"
                             "-(4*s^3+2*b*s^5)*x*y^6",
                             r));
         return t.done();
       }},
      {"w10.newton", "W10", "W1,0 proposition, proof: Newton data of f-bar",
       "f-bar has face s^3x^3+(s^4+bs^6)y^8, is non-degenerate, nu = mu = 14",
       [](const LocalOptions& opt) {
         auto r = ring_xy({"b", "s"});
         Poly fs = parse_poly("x^4+(y^2+s*x)^3+b*x^2*y^4", r);
         Poly bar = substitute(fs, {{"x", parse_poly("x-s*y^2", r)}, {"y", parse_poly("s*y", r)}});
         Tally t;
         t.expect("face", face_poly(bar, segment(0, 8, 3, 0)), parse_poly("s^3*x^3+(s^4+b*s^6)*y^8", r));
         t.expect("nondegenerate", nondegenerate(bar), true);
         t.expect("nu", newton_number(bar), 14L);
         t.expect("mu", milnor(bar, MilnorMethod::standard_basis, opt), Multiplicity(14));
         return t.done();
       }},
      {"w10.jump", "W10", "W1,0 proposition, proof: jump of the deformation",
       "mu(f_s) = 14 for s != 0, so the deformation has jump 1",
       [](const LocalOptions& opt) {
         auto r = ring_xy({"b", "s"});
         Family fam = make_family(parse_poly("x^4+(y^2+s*x)^3+b*x^2*y^4", r),
                                  parse_poly("x^4+y^6+b*x^2*y^4", r), "s", opt);
         GenericMuOptions gopt;
         gopt.local = opt;
         JumpReport rep = family_jump(fam, gopt);
         Tally t;
         t.expect("mu_base", rep.mu_base, std::size_t{15});
         t.expect("mu_generic", rep.mu_generic.value, std::size_t{14});
         t.expect("jump", rep.jump, std::size_t{1});
         return t.done();
       }},
      {"susp.mu", "SUSP", "stable equivalence proposition, proof: mu(f + z^2) = mu(f)",
       "adding a square in a new variable keeps mu",
       [](const LocalOptions& opt) {
         Tally t;
         auto r = ring_xy({"a"});
         for (const char* src : {"x^4+y^4+a*x^2*y^2", "x^4+y^4+x^2*y^2", "x^4+y^4+3*x^2*y^2", "x^2+y^3", "x^3+y^3"}) {
           Poly f = parse_poly(src, r);
           t.expect(std::string("mu(") + src + " + z^2)", milnor(suspend(f, 1), MilnorMethod::standard_basis, opt),
                    milnor(f, MilnorMethod::standard_basis, opt));
         }
         return t.done();
       }},
      {"search.x9", "SEARCH", "X9 theorem: the jump is 2",
       "grid over x^2, xy^2 on x^4+y^4 finds minimal jump 2 and never 1",
       [](const LocalOptions& opt) {
         auto r = ring_xy({});
         SearchOptions so;
         so.local = opt;
         auto res = search_min_jump(parse_poly("x^4+y^4", r), grid(r, {"x^2", "x*y^2"}, {0, 1, 2}, {1, 2}, 2), so);
         Tally t;
         t.expect("min_jump", res.min_nonzero_jump.value_or(0), std::size_t{2});
         t.expect("count(jump=1)", res.histogram.count(1), std::size_t{0});
         t.expect("errors", res.errors, std::size_t{0});
         return t.done();
       }},
      {"search.w10", "SEARCH", "W1,0 proposition: the jump is 1",
       "grid over x^3, x^2y^2, xy^4 on x^4+y^6 finds minimal jump 1",
       [](const LocalOptions& opt) {
         auto r = ring_xy({});
         SearchOptions so;
         so.local = opt;
         auto res = search_min_jump(parse_poly("x^4+y^6", r),
                                    grid(r, {"x^3", "x^2*y^2", "x*y^4"}, {0, 1, 3}, {1, 2, 3}, 3), so);
         Tally t;
         t.expect("min_jump", res.min_nonzero_jump.value_or(0), std::size_t{1});
         t.expect("errors", res.errors, std::size_t{0});
         return t.done();
       }},
  };
  return list;
}

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::vector<std::string> anchor_tags() { return {"X9", "W10", "SUSP", "SEARCH"}; }

std::vector<AnchorResult> run_anchors(const AnchorOptions& options) {
  const std::string only = upper(options.only);
  if (!only.empty()) {
    auto tags = anchor_tags();
    if (std::find(tags.begin(), tags.end(), only) == tags.end())
      throw Error(ErrorKind::SyntaxError, "unknown anchor tag '" + options.only + "'");
  }
  std::vector<AnchorResult> out;
  for (const auto& a : anchors()) {
    if (!only.empty() && only != a.tag) continue;
    AnchorResult res{a.id, a.tag, a.location, a.claim, false, {}, 0};
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = a.run(options.local);
      res.passed = o.passed;
      res.detail = std::move(o.detail);
    } catch (const Error& e) {
      res.detail = std::string(e.kind_name()) + ": " + e.what();
    } catch (const std::exception& e) {
      res.detail = std::string("internal error: ") + e.what();
    }
    res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace milnorkit
