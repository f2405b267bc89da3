// Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion with the
// observed values, the elapsed time and its limit; exits nonzero on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "milnorkit/deform.hpp"
#include "milnorkit/errors.hpp"
#include "milnorkit/jump_search.hpp"
#include "milnorkit/local_algebra.hpp"
#include "milnorkit/newton.hpp"
#include "support.hpp"

using namespace milnorkit;
using milnorkit::testing::P;
using milnorkit::testing::mono;

namespace {

// Equality is exact everywhere; only the runtime has a limit.
class Check {
 public:
  template <class A, class B>
  void eq(const std::string& name, const A& got, const B& want) {
    bool ok = got == want;
    ok_ = ok_ && ok;
    note(name + "=" + show(got) + (ok ? "" : " (want " + show(want) + ")"));
  }
  void that(const std::string& name, bool ok) {
    ok_ = ok_ && ok;
    note(name + (ok ? "" : " FAILED"));
  }
  void fail(const std::string& why) {
    ok_ = false;
    note(why);
  }
  bool ok() const { return ok_; }
  std::string text() const { return out_.str(); }

 private:
  void note(const std::string& s) { out_ << (out_.tellp() > 0 ? ", " : "") << s; }
  static std::string show(const Multiplicity& m) { return m.to_string(); }
  static std::string show(const Poly& p) { return p.to_string(); }
  static std::string show(bool b) { return b ? "true" : "false"; }
  template <class T>
  static std::string show(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }

  std::ostringstream out_;
  bool ok_ = true;
};

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<void(Check&)> body;
};

RingPtr xy(std::vector<std::string> params = {}) { return make_ring({"x", "y"}, std::move(params)); }

Poly x9_bar(const RingPtr& r) {
  Poly fs = P("x^4+(y^2+s*x)^2+a*x^2*(y^2+s*x)", r);
  return substitute(fs, {{"x", P("x-s*y^2", r)}, {"y", P("s*y", r)}});
}

Poly w10_bar(const RingPtr& r) {
  Poly fs = P("x^4+(y^2+s*x)^3+b*x^2*y^4", r);
  return substitute(fs, {{"x", P("x-s*y^2", r)}, {"y", P("s*y", r)}});
}

std::vector<Criterion> criteria() {
  return {
      {1, "mu(x^4+y^4+ax^2y^2) = 9 by all three methods", 1.0,
       [](Check& c) {
         auto r = xy({"a"});
         Poly f = P("x^4+y^4+a*x^2*y^2", r);
         c.eq("standard_basis", milnor(f, MilnorMethod::standard_basis), Multiplicity(9));
         for (long a : {1L, 3L}) {
           Poly fa = specialize_params(f, {{"a", Rational(a)}});
           MilnorReport rep = milnor_report(fa, MilnorMethod::all);
           for (const char* m : {"standard_basis", "jets", "resultant"})
             c.eq(std::string(m) + "(a=" + std::to_string(a) + ")", rep.per_method.at(m), Multiplicity(9));
         }
       }},
      {2, "versal basis of the X9 germ and colength(m J) = mu + 2", 1.0,
       [](Check& c) {
         auto r = xy({"a"});
         Poly f = P("x^4+y^4+a*x^2*y^2", r);
         auto basis = versal_basis(f);
         std::set<ExpVec> want;
         for (const char* m : {"x", "y", "x^2", "x*y", "y^2", "x^3", "x^2*y", "x*y^2", "y^3", "x^2*y^2"})
           want.insert(mono(m, r));
         c.eq("size", basis.size(), std::size_t{10});
         c.that("basis", std::set<ExpVec>(basis.begin(), basis.end()) == want);
         c.eq("colength(mJ)", colength(IdealGens::maximal_times_jacobian(f)), Multiplicity(11));
       }},
      {3, "reduction certificates modulo m J of the X9 germ", 2.0,
       [](Check& c) {
         auto r = xy({"a"});
         StandardBasis b = standard_basis(IdealGens::maximal_times_jacobian(P("x^4+y^4+a*x^2*y^2", r)));
         for (const char* m : {"x^5", "x^3*y", "y^5", "x*y^3"}) {
           Poly g = P(m, r);
           Reduction red = local_reduce(g, b, true);
           Poly rest = g - red.normal_form;
           for (std::size_t i = 0; i < b.elements.size(); ++i) rest -= red.cofactors[i] * b.elements[i];
           c.that(std::string(m) + " nf=0", red.normal_form.is_zero());
           c.that(std::string(m) + " recombines", rest.truncated(red.cap).is_zero());
         }
         for (const char* m : {"x^4", "y^4"})
           c.eq(std::string("nf(") + m + ")", local_reduce(P(m, r), b, false).normal_form, P("-a/2*x^2*y^2", r));
       }},
      {4, "X9 deformation: f-bar, nu = 7, non-degenerate, generic mu 7, jump 2", 5.0,
       [](Check& c) {
         auto r = xy({"a", "s"});
         Poly bar = x9_bar(r);
         c.that("f-bar matches", bar == P("s^2*x^2+a*s^3*x*y^4+s^4*y^8+a*s*x^3+x^4-2*a*s^2*x^2*y^2-4*s*x^3*y^2"
                                           "+6*s^2*x^2*y^4-4*s^3*x*y^6",
                                           r));
         c.eq("nu", newton_number(bar), 7L);
         c.eq("nondegenerate", nondegenerate(bar), true);
         Family fam = make_family(P("x^4+(y^2+s*x)^2+a*x^2*(y^2+s*x)", r), P("x^4+y^4+a*x^2*y^2", r));
         JumpReport rep = family_jump(fam);
         c.eq("generic_mu", rep.mu_generic.value, std::size_t{7});
         c.eq("jump", rep.jump, std::size_t{2});
       }},
      {5, "W1,0 deformation: mu 15, nu(f-bar) 14, generic mu 14, jump 1", 5.0,
       [](Check& c) {
         auto r = xy({"b", "s"});
         Poly base = P("x^4+y^6+b*x^2*y^4", r);
         c.eq("mu(base)", milnor(base), Multiplicity(15));
         c.eq("nu(f-bar)", newton_number(w10_bar(r)), 14L);
         JumpReport rep = family_jump(make_family(P("x^4+(y^2+s*x)^3+b*x^2*y^4", r), base));
         c.eq("generic_mu", rep.mu_generic.value, std::size_t{14});
         c.eq("jump", rep.jump, std::size_t{1});
       }},
      {6, "suspension invariance mu(f + z^2) = mu(f)", 5.0,
       [](Check& c) {
         auto r = xy();
         for (const char* f : {"x^4+y^4+x^2*y^2", "x^4+y^4+3*x^2*y^2", "x^2+y^3", "x^3+y^3"}) {
           Poly g = P(f, r);
           c.eq(std::string("mu(") + f + "+z^2)", milnor(suspend(g, 1)), milnor(g));
         }
       }},
      {7, "seeded corpus: mu >= nu, mu = nu iff non-degenerate, methods agree, colength(mJ) = mu + 2", 60.0,
       [](Check& c) {
         auto corpus = milnorkit::testing::plane_corpus(60, 20261016);
         std::size_t bad_ineq = 0, bad_iff = 0, bad_agree = 0, bad_mj = 0, degenerate = 0;
         for (const auto& g : corpus) {
           MilnorReport rep = milnor_report(g.f, MilnorMethod::all);
           for (const auto& [name, m] : rep.per_method) bad_agree += !(m == rep.value);
           long mu = static_cast<long>(rep.value.value()), nu = newton_number(g.f);
           bool nd = nondegenerate(g.f);
           degenerate += !nd;
           bad_ineq += mu < nu;
           bad_iff += (mu == nu) != nd;
           bad_mj += !(colength(IdealGens::maximal_times_jacobian(g.f)) == Multiplicity(rep.value.value() + 2));
         }
         c.eq("germs", corpus.size(), std::size_t{60});
         c.that("degenerate members present", degenerate > 0);
         c.eq("mu<nu", bad_ineq, std::size_t{0});
         c.eq("iff violations", bad_iff, std::size_t{0});
         c.eq("method disagreements", bad_agree, std::size_t{0});
         c.eq("colength(mJ)!=mu+2", bad_mj, std::size_t{0});
       }},
      {8, "a = 2: (x^2+y^2)^2 is degenerate with infinite mu", 1.0,
       [](Check& c) {
         auto r = xy({"a"});
         Poly f = specialize_params(P("x^4+y^4+a*x^2*y^2", r), {{"a", Rational(2)}});
         c.that("equals (x^2+y^2)^2", f == P("(x^2+y^2)^2", r));
         c.eq("nondegenerate", nondegenerate(f), false);
         c.eq("mu", milnor(f), Multiplicity::infinite());
       }},
      {9, "jump search: X9 grid minimum 2 without 1, W1,0 grid minimum 1", 120.0,
       [](Check& c) {
         auto r = xy();
         auto grid = [&](std::vector<const char*> dirs, std::vector<long> coeffs, std::vector<unsigned> w,
                         std::size_t k) {
           SearchGrid g;
           for (const char* d : dirs) g.directions.push_back(mono(d, r));
           for (long v : coeffs) g.coefficients.emplace_back(v);
           g.weights = std::move(w);
           g.max_active = k;
           return g;
         };
         auto x9 = search_min_jump(P("x^4+y^4", r), grid({"x^2", "x*y^2"}, {0, 1, 2}, {1, 2}, 2));
         c.eq("x9 min", x9.min_nonzero_jump.value_or(0), std::size_t{2});
         c.eq("x9 count(jump=1)", x9.histogram.count(1), std::size_t{0});
         auto w10 = search_min_jump(P("x^4+y^6", r), grid({"x^3", "x^2*y^2", "x*y^4"}, {0, 1, 3}, {1, 2, 3}, 3));
         c.eq("w10 min", w10.min_nonzero_jump.value_or(0), std::size_t{1});
         c.eq("errors", x9.errors + w10.errors, std::size_t{0});
       }},
      {10, "nu <= 6 for non-degenerate x^2(ex+zy) + P4", 30.0,
       [](Check& c) {
         auto r = xy();
         std::size_t total = 0, nondeg = 0, violations = 0;
         long worst = 0;
         for (int eps = 0; eps <= 1; ++eps)
           for (int zeta = 0; zeta <= 1; ++zeta) {
             if (eps == 0 && zeta == 0) continue;  // no cubic part
             for (int mask = 0; mask < 8; ++mask) {
               Poly f = P("x^4+y^4", r);
               if (eps) f += P("x^3", r);
               if (zeta) f += P("x^2*y", r);
               const char* mid[] = {"x^3*y", "x^2*y^2", "x*y^3"};
               for (int k = 0; k < 3; ++k)
                 if (mask >> k & 1) f += P(mid[k], r);
               ++total;
               if (!newton_polygon(f).convenient() || !nondegenerate(f)) continue;
               ++nondeg;
               long nu = newton_number(f);
               worst = std::max(worst, nu);
               violations += nu > 6;
             }
           }
         c.eq("germs", total, std::size_t{24});
         c.that("non-degenerate members present", nondeg > 0);
         c.eq("max nu", worst, 6L);
         c.eq("nu>6", violations, std::size_t{0});
       }},
  };
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& cr : criteria()) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const Error& e) {
      c.fail(std::string("error ") + std::string(e.kind_name()) + ": " + e.what());
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < cr.limit_s;
    bool pass = c.ok() && in_time;
    failed += !pass;
    std::printf("%s criterion %2d: %s [%s] (%.3f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", cr.id, cr.title,
                c.text().c_str(), secs, cr.limit_s, in_time ? "" : ", over limit");
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
