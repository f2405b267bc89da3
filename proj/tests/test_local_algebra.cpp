#include <gtest/gtest.h>

#include <random>
#include <set>

#include "milnorkit/errors.hpp"
#include "milnorkit/local_algebra.hpp"
#include "milnorkit/newton.hpp"
#include "support.hpp"

using namespace milnorkit;
using namespace milnorkit::testing;

namespace {

RingPtr xy() { return make_ring({"x", "y"}); }
RingPtr xy_a() { return make_ring({"x", "y"}, {"a"}); }

Poly x9(const RingPtr& r) { return P("x^4+y^4+a*x^2*y^2", r); }

IdealGens ideal(std::initializer_list<const char*> gens, const RingPtr& r) {
  std::vector<Poly> g;
  for (const char* t : gens) g.push_back(P(t, r));
  return IdealGens(g);
}

std::set<ExpVec> monos(std::initializer_list<const char*> list, const RingPtr& r) {
  std::set<ExpVec> out;
  for (const char* m : list) out.insert(mono(m, r));
  return out;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::IoError;
}

bool recombines(const Poly& g, const StandardBasis& b, const Reduction& red) {
  Poly rest = g - red.normal_form;
  for (std::size_t i = 0; i < b.elements.size(); ++i) rest -= red.cofactors[i] * b.elements[i];
  return rest.truncated(red.cap).is_zero();
}

}  // namespace

TEST(StandardBasis, MaximalIdeal) {
  RingPtr r = xy();
  StandardBasis b = standard_basis(ideal({"x", "y"}, r));
  EXPECT_EQ(b.elements.size(), 2u);
  std::set<ExpVec> lead(b.leading_exponents.begin(), b.leading_exponents.end());
  EXPECT_EQ(lead, monos({"x", "y"}, r));
  EXPECT_EQ(quotient_basis(b).colength(), 1u);
}

TEST(StandardBasis, NonIsolatedIdealExceedsCap) {
  try {
    standard_basis(ideal({"x^2", "x*y"}, xy()), 16);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
    EXPECT_NE(std::string(e.what()).find("staircase"), std::string::npos) << e.what();
  }
}

TEST(StandardBasis, X9JacobianStaircase) {
  StandardBasis b = standard_basis(IdealGens::jacobian(x9(xy_a())));
  EXPECT_TRUE(b.certified_finite());
  EXPECT_EQ(quotient_basis(b).colength(), 9u);
}

TEST(StandardBasis, LeadingExponentsAreIncomparable) {
  StandardBasis b = standard_basis(IdealGens::maximal_times_jacobian(x9(xy_a())));
  for (const auto& p : b.leading_exponents)
    for (const auto& q : b.leading_exponents)
      if (!(p == q)) {
        EXPECT_FALSE(p.divides(q));
      }
}

TEST(Colength, Examples) {
  RingPtr r = make_ring({"x", "y"}, {"b"});
  EXPECT_EQ(colength(ideal({"x^2", "y^3"}, r)), Multiplicity(6));
  EXPECT_EQ(colength(IdealGens::jacobian(P("x^4+y^6+b*x^2*y^4", r))), Multiplicity(15));
  EXPECT_EQ(colength(IdealGens::jacobian(P("(x^2+y^2)^2", r))), Multiplicity::infinite());
  EXPECT_EQ(colength(ideal({"x^2", "x*y"}, r)), Multiplicity::infinite());
}

TEST(Colength, ThreeVariables) {
  RingPtr r = make_ring({"x", "y", "z"});
  EXPECT_EQ(colength(ideal({"x^2", "y^2", "z^3"}, r)), Multiplicity(12));
  EXPECT_EQ(colength(ideal({"x*y", "z"}, r)), Multiplicity::infinite());
}

TEST(Milnor, Examples) {
  EXPECT_EQ(milnor(P("x^2+y^2", xy())), Multiplicity(1));
  EXPECT_EQ(milnor(x9(xy_a())), Multiplicity(9));
  RingPtr rs = make_ring({"x", "y"}, {"a", "s"});
  Poly bar = substitute(P("x^4+(y^2+s*x)^2+a*x^2*(y^2+s*x)", rs), {{"x", P("x-s*y^2", rs)}, {"y", P("s*y", rs)}});
  EXPECT_EQ(milnor(bar), Multiplicity(7));
}

TEST(Milnor, SmoothAndNonzero) {
  EXPECT_EQ(milnor(P("x+y^2", xy()), MilnorMethod::all), Multiplicity(0));
  EXPECT_EQ(kind_of([] { milnor(P("1+x^2+y^2", xy())); }), ErrorKind::NonzeroAtOrigin);
}

TEST(Milnor, AllMethodsOnX9) {
  RingPtr r = xy_a();
  MilnorReport rep = milnor_report(x9(r), MilnorMethod::all);
  EXPECT_EQ(rep.value, Multiplicity(9));
  for (const char* m : {"standard_basis", "jets", "resultant"}) EXPECT_EQ(rep.per_method.at(m), Multiplicity(9)) << m;
  for (long a : {1L, 3L}) {
    Poly f = specialize_params(x9(r), {{"a", Rational(a)}});
    EXPECT_EQ(milnor(f, MilnorMethod::jets), Multiplicity(9));
    EXPECT_EQ(milnor(f, MilnorMethod::resultant), Multiplicity(9));
  }
}

TEST(Milnor, DegenerateParameterValue) {
  Poly f = specialize_params(x9(xy_a()), {{"a", Rational(2)}});
  EXPECT_EQ(f, P("(x^2+y^2)^2", xy_a()));
  EXPECT_FALSE(nondegenerate(f));
  EXPECT_EQ(milnor(f), Multiplicity::infinite());
  EXPECT_EQ(milnor(f, MilnorMethod::all), Multiplicity::infinite());
}

TEST(Milnor, MethodNames) {
  for (auto m : {MilnorMethod::standard_basis, MilnorMethod::jets, MilnorMethod::resultant, MilnorMethod::all})
    EXPECT_EQ(parse_method(method_name(m)), m);
  EXPECT_EQ(kind_of([] { parse_method("groebner"); }), ErrorKind::SyntaxError);
}

TEST(Jets, Examples) {
  RingPtr r = xy();
  EXPECT_EQ(jet_colength(ideal({"x", "y"}, r), 5), 1u);
  EXPECT_EQ(jet_colength(ideal({"x^2", "y^3"}, r), 8), 6u);
  Poly f1 = specialize_params(x9(xy_a()), {{"a", Rational(1)}});
  EXPECT_EQ(jet_colength(IdealGens::jacobian(f1), 10), 9u);
}

TEST(Jets, NotStabilizedBelowTheStaircase) {
  Poly f1 = specialize_params(x9(xy_a()), {{"a", Rational(1)}});
  EXPECT_EQ(kind_of([&] { jet_colength(IdealGens::jacobian(f1), 2); }), ErrorKind::NotStabilized);
  LocalOptions opt;
  opt.jet_cap = 2;
  EXPECT_EQ(kind_of([&] { milnor(f1, MilnorMethod::jets, opt); }), ErrorKind::NotStabilized);
}

TEST(Resultant, Examples) {
  RingPtr r = xy();
  EXPECT_EQ(resultant_mu(P("x^2+y^3", r)), 2u);
  EXPECT_EQ(resultant_mu(P("x^4+y^4+x^2*y^2", r)), 9u);
  EXPECT_EQ(resultant_mu(P("x+y^2", r)), 0u);
}

TEST(Resultant, Errors) {
  EXPECT_EQ(kind_of([] { resultant_mu(P("(x^2+y^2)^2", xy())); }), ErrorKind::NonIsolated);
  EXPECT_EQ(kind_of([] { resultant_mu(P("x^2+y^2+z^2", make_ring({"x", "y", "z"}))); }),
            ErrorKind::ArityUnsupported);
}

TEST(Resultant, SeedIndependent) {
  Poly f = P("x^5+y^4+x^2*y^2-3*x^3*y", xy());
  std::size_t mu = milnor(f).value();
  for (std::uint64_t seed : {0u, 1u, 7u, 12345u}) EXPECT_EQ(resultant_mu(f, seed), mu) << seed;
}

TEST(Versal, X9Basis) {
  RingPtr r = xy_a();
  auto basis = versal_basis(x9(r));
  std::set<ExpVec> got(basis.begin(), basis.end());
  EXPECT_EQ(got, monos({"x", "y", "x^2", "x*y", "y^2", "x^3", "x^2*y", "x*y^2", "y^3", "x^2*y^2"}, r));
  EXPECT_EQ(basis.size(), 10u);
  EXPECT_EQ(colength(IdealGens::maximal_times_jacobian(x9(r))), Multiplicity(11));
}

TEST(Versal, SmallExamples) {
  RingPtr r = xy();
  auto b1 = versal_basis(P("x^2+y^2", r));
  EXPECT_EQ(std::set<ExpVec>(b1.begin(), b1.end()), monos({"x", "y"}, r));
  auto b2 = versal_basis(P("x^3+y^3", r));
  EXPECT_EQ(std::set<ExpVec>(b2.begin(), b2.end()), monos({"x", "y", "x^2", "x*y", "y^2"}, r));
  EXPECT_EQ(jet_colength(IdealGens::maximal_times_jacobian(P("x^3+y^3", r)), 6), 6u);
  EXPECT_EQ(kind_of([&] { versal_basis(P("(x^2+y^2)^2", r)); }), ErrorKind::NonIsolated);
}

TEST(LocalReduce, LemmaIdentities) {
  RingPtr r = xy_a();
  StandardBasis b = standard_basis(IdealGens::maximal_times_jacobian(x9(r)));
  for (const char* m : {"x^5", "x^3*y", "y^5", "x*y^3"}) {
    Reduction red = local_reduce(P(m, r), b, true);
    EXPECT_TRUE(red.normal_form.is_zero()) << m;
    EXPECT_TRUE(recombines(P(m, r), b, red)) << m;
  }
  for (const char* m : {"x^4", "y^4"}) EXPECT_EQ(local_reduce(P(m, r), b, false).normal_form, P("-a/2*x^2*y^2", r));
}

TEST(LocalReduce, UnitIdeal) {
  RingPtr r = xy();
  StandardBasis b = standard_basis(ideal({"1+x", "y"}, r));
  Reduction red = local_reduce(P("x^3-7*y+2", r), b, true);
  EXPECT_TRUE(red.normal_form.is_zero());
  EXPECT_TRUE(recombines(P("x^3-7*y+2", r), b, red));
}

TEST(LocalQuotient, PreferredBasisAndNilpotency) {
  RingPtr r = xy_a();
  LocalQuotient q(standard_basis(IdealGens::maximal_times_jacobian(x9(r))));
  EXPECT_EQ(q.monomial_basis().size(), 11u);
  EXPECT_LE(q.nilpotency_degree(), 6u);
  EXPECT_TRUE(q.normal_form(P("x^6", r)).is_zero());
}

// Corpus-wide properties. The corpus is seeded and shared by the tests.
class Corpus : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { corpus_ = new std::vector<CorpusGerm>(plane_corpus(60, 20261016)); }
  static void TearDownTestSuite() {
    delete corpus_;
    corpus_ = nullptr;
  }
  static std::vector<CorpusGerm>* corpus_;
};
std::vector<CorpusGerm>* Corpus::corpus_ = nullptr;

TEST_F(Corpus, HasDegenerateAndNondegenerateMembers) {
  ASSERT_GE(corpus_->size(), 50u);
  std::size_t planted = 0;
  for (const auto& g : *corpus_) planted += g.planted_degenerate;
  EXPECT_GE(planted, 10u);
  for (const auto& g : *corpus_)
    for (const auto& e : g.f.support()) EXPECT_TRUE(e[0] <= 5 && e[1] <= 5) << g.f.to_string();
}

TEST_F(Corpus, ThreeMethodsAgree) {
  for (const auto& g : *corpus_) {
    MilnorReport rep = milnor_report(g.f, MilnorMethod::all);
    EXPECT_EQ(rep.per_method.size(), 3u);
    for (const auto& [name, m] : rep.per_method) EXPECT_EQ(m, rep.value) << name << " on " << g.f.to_string();
  }
}

TEST_F(Corpus, KouchnirenkoAndPloski) {
  for (const auto& g : *corpus_) {
    std::size_t mu = milnor(g.f).value();
    long nu = newton_number(g.f);
    bool nd = nondegenerate(g.f);
    EXPECT_GE(static_cast<long>(mu), nu) << g.f.to_string();
    if (nd) { EXPECT_EQ(static_cast<long>(mu), nu) << g.f.to_string(); }
    if (static_cast<long>(mu) == nu) { EXPECT_TRUE(nd) << g.f.to_string(); }
    if (g.planted_degenerate) { EXPECT_FALSE(nd) << g.f.to_string(); }
  }
}

TEST_F(Corpus, MaximalTimesJacobianColength) {
  for (const auto& g : *corpus_) {
    std::size_t mu = milnor(g.f).value();
    EXPECT_EQ(colength(IdealGens::maximal_times_jacobian(g.f)), Multiplicity(mu + 2)) << g.f.to_string();
    EXPECT_EQ(versal_basis(g.f).size(), mu + 1) << g.f.to_string();
  }
}

TEST_F(Corpus, CertificatesRecombine) {
  std::mt19937_64 rng(4242);
  for (std::size_t k = 0; k < corpus_->size(); k += 3) {
    const Poly& f = (*corpus_)[k].f;
    StandardBasis b = standard_basis(IdealGens::jacobian(f));
    Poly g = random_poly(rng, f.ring_ptr(), 6, 4);
    Reduction red = local_reduce(g, b, true);
    EXPECT_TRUE(recombines(g, b, red)) << f.to_string() << " reducing " << g.to_string();
    // the normal form lies in the span of the staircase complement
    LocalQuotient q(b);
    for (const auto& [e, c] : red.normal_form.terms())
      EXPECT_NE(std::find(q.monomial_basis().begin(), q.monomial_basis().end(), e), q.monomial_basis().end());
  }
}

TEST_F(Corpus, StaircaseIsClosedUnderDivision) {
  for (std::size_t k = 0; k < corpus_->size(); k += 4) {
    QuotientBasis qb = quotient_basis(standard_basis(IdealGens::jacobian((*corpus_)[k].f)));
    std::set<ExpVec> stairs(qb.standard_monomials.begin(), qb.standard_monomials.end());
    for (const auto& e : stairs)
      for (std::size_t i = 0; i < 2; ++i)
        if (e[i] > 0) {
          ExpVec d = e;
          d[i] -= 1;
          EXPECT_TRUE(stairs.count(d));
        }
  }
}

TEST_F(Corpus, SymmetryUnderSwapAndScaling) {
  for (std::size_t k = 0; k < corpus_->size(); k += 2) {
    const Poly& f = (*corpus_)[k].f;
    RingPtr r = f.ring_ptr();
    Multiplicity mu = milnor(f);
    Poly swapped = substitute(f, {{"x", P("y", r)}, {"y", P("x", r)}});
    Poly scaled = substitute(f, {{"x", P("-5/3*x", r)}});
    EXPECT_EQ(milnor(swapped), mu) << f.to_string();
    EXPECT_EQ(milnor(scaled), mu) << f.to_string();
  }
}
