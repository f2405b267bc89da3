#include <gtest/gtest.h>

#include <random>

#include "milnorkit/errors.hpp"
#include "milnorkit/poly.hpp"
#include "support.hpp"

using namespace milnorkit;
using namespace milnorkit::testing;

namespace {

RingPtr xy_a() { return make_ring({"x", "y"}, {"a"}); }
RingPtr xy_as() { return make_ring({"x", "y"}, {"a", "s"}); }

ErrorKind parse_error(const std::string& text, const RingPtr& ring) {
  try {
    parse_poly(text, ring);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorKind::IoError;
}

}  // namespace

TEST(PolyRing, ParsesX9Germ) {
  Poly f = P("x^4+y^4+a*x^2*y^2", xy_a());
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.coefficient(mono("x^2*y^2", xy_a())), parse_scalar("a", {"a"}));
  EXPECT_EQ(P(f.to_string(), xy_a()), f);
}

TEST(PolyRing, ParseErrors) {
  EXPECT_TRUE(P("0", xy_a()).is_zero());
  EXPECT_EQ(parse_error("x^-1", xy_a()), ErrorKind::NegativeExponent);
  EXPECT_EQ(parse_error("x^4+q", xy_a()), ErrorKind::UnknownSymbol);
  EXPECT_EQ(parse_error("x^4+*y", xy_a()), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("(x+y", xy_a()), ErrorKind::SyntaxError);
}

TEST(PolyRing, SyntaxErrorCarriesPosition) {
  try {
    parse_poly("x^4 + y^", xy_a());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
    EXPECT_NE(std::string(e.what()).find("position"), std::string::npos) << e.what();
  }
}

TEST(PolyRing, UndeclaredSymbolIsNotAVariable) {
  EXPECT_EQ(parse_error("x^4+a*y^2", make_ring({"x", "y"})), ErrorKind::UnknownSymbol);
}

TEST(PolyRing, Partials) {
  RingPtr r = xy_a();
  EXPECT_EQ(partial(P("x^4+y^4+a*x^2*y^2", r), "x"), P("4*x^3+2*a*x*y^2", r));
  EXPECT_TRUE(partial(P("y^4", r), "x").is_zero());
  RingPtr rs = xy_as();
  EXPECT_EQ(partial(P("x^4+(y^2+s*x)^2+a*x^2*(y^2+s*x)", rs), "y"), P("4*y*(y^2+s*x)+2*a*x^2*y", rs));
}

TEST(PolyRing, PartialOfUnknownVariable) {
  try {
    partial(P("x", xy_a()), "z");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownSymbol);
  }
}

TEST(PolyRing, CoordinateChangeOfX9Family) {
  RingPtr r = xy_as();
  Poly fs = P("x^4+(y^2+s*x)^2+a*x^2*(y^2+s*x)", r);
  Poly bar = substitute(fs, {{"x", P("x-s*y^2", r)}, {"y", P("s*y", r)}});
  EXPECT_EQ(bar, P("s^2*x^2 + a*s^3*x*y^4 + s^4*y^8 + a*s*x^3 + x^4 - 2*a*s^2*x^2*y^2 - 4*s*x^3*y^2"
                   " + 6*s^2*x^2*y^4 - 4*s^3*x*y^6",
                   r));
}

TEST(PolyRing, SubstituteIdentityAndRestriction) {
  RingPtr r = xy_a();
  Poly f = P("x^4+y^4+a*x^2*y^2", r);
  EXPECT_EQ(substitute(f, {}), f);
  EXPECT_EQ(substitute(f, {{"x", P("x", r)}, {"y", P("y", r)}}), f);
  EXPECT_EQ(substitute(f, {{"y", P("0", r)}}), P("x^4", r));
}

TEST(PolyRing, SubstituteRejectsForeignRing) {
  try {
    substitute(P("x", xy_a()), {{"x", P("x", make_ring({"x", "y", "z"}))}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ArityMismatch);
  }
}

TEST(PolyRing, Order) {
  RingPtr r = xy_a();
  EXPECT_EQ(P("x^4+y^4+a*x^2*y^2", r).order(), 4u);
  EXPECT_EQ(P("x^3+x^4+y^4", r).order(), 3u);
  EXPECT_FALSE(P("0", r).order().has_value());
}

TEST(PolyRing, JsonRoundTrip) {
  RingPtr r = xy_a();
  Poly f = P("x^4-3/7*y^4+a/(a^2-4)*x^2*y^2", r);
  nlohmann::json j = f.to_json();
  ASSERT_TRUE(j.is_array());
  EXPECT_TRUE(j[0].contains("exps"));
  EXPECT_TRUE(j[0].contains("coeff"));
  EXPECT_EQ(Poly::from_json(r, j), f);
}

TEST(PolyRing, RingValidation) {
  EXPECT_THROW(make_ring({"x", "x"}), Error);
  EXPECT_THROW(make_ring({"x", "y"}, {"x"}), Error);
  EXPECT_THROW(make_ring({"x", "y", "z", "w", "v"}), Error);
}

// Properties over seeded random pairs with coefficients in Q(a).
class RingProperties : public ::testing::TestWithParam<int> {};

TEST_P(RingProperties, LeibnizRule) {
  std::mt19937_64 rng(500 + GetParam());
  RingPtr r = make_ring({"x", "y", "z"}, {"a"});
  Poly f = random_poly(rng, r, 4, 5) + P("a*x*y", r), g = random_poly(rng, r, 4, 5);
  for (const char* v : {"x", "y", "z"}) EXPECT_EQ(partial(f * g, v), f * partial(g, v) + g * partial(f, v));
}

TEST_P(RingProperties, SubstitutionIsMultiplicative) {
  std::mt19937_64 rng(600 + GetParam());
  RingPtr r = xy_a();
  Poly f = random_poly(rng, r, 4, 4), g = random_poly(rng, r, 4, 4);
  std::map<std::string, Poly> sigma{{"x", random_poly(rng, r, 3, 3)}, {"y", P("x+a*y", r)}};
  EXPECT_EQ(substitute(f * g, sigma), substitute(f, sigma) * substitute(g, sigma));
  EXPECT_EQ(substitute(f + g, sigma), substitute(f, sigma) + substitute(g, sigma));
}

TEST_P(RingProperties, OrderIsAdditive) {
  std::mt19937_64 rng(700 + GetParam());
  RingPtr r = xy_a();
  Poly f = random_poly(rng, r, 5, 4), g = random_poly(rng, r, 5, 4);
  if (f.is_zero()) f = P("x", r);
  if (g.is_zero()) g = P("y", r);
  EXPECT_EQ(*(f * g).order(), *f.order() + *g.order());
}

TEST_P(RingProperties, FormatParseRoundTrip) {
  std::mt19937_64 rng(800 + GetParam());
  RingPtr r = xy_a();
  Poly f = random_poly(rng, r, 6, 6) * P("a-1/3", r) + P("-a^2*x", r);
  EXPECT_EQ(P(f.to_string(), r), f);
  EXPECT_EQ(P(f.to_string(), r).to_string(), f.to_string());
}

INSTANTIATE_TEST_SUITE_P(Seeded, RingProperties, ::testing::Range(0, 25));
