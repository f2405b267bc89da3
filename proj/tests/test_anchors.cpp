#include <gtest/gtest.h>

#include <set>

#include "milnorkit/anchors.hpp"
#include "milnorkit/errors.hpp"

using namespace milnorkit;

TEST(Anchors, AllPass) {
  auto results = run_anchors({});
  EXPECT_GE(results.size(), 15u);
  std::set<std::string> ids;
  for (const auto& r : results) {
    EXPECT_TRUE(r.passed) << r.id << ": " << r.detail;
    EXPECT_FALSE(r.location.empty()) << r.id;
    EXPECT_FALSE(r.claim.empty()) << r.id;
    EXPECT_TRUE(ids.insert(r.id).second) << "duplicate " << r.id;
  }
}

TEST(Anchors, FilterByTag) {
  for (const auto& tag : anchor_tags()) {
    AnchorOptions opt;
    opt.only = tag;
    auto results = run_anchors(opt);
    EXPECT_FALSE(results.empty()) << tag;
    for (const auto& r : results) EXPECT_EQ(r.tag, tag);
  }
  AnchorOptions lower;
  lower.only = "w10";
  EXPECT_FALSE(run_anchors(lower).empty());
}

TEST(Anchors, UnknownTagIsRejected) {
  AnchorOptions opt;
  opt.only = "NOPE";
  try {
    run_anchors(opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
  }
}

TEST(Anchors, TinyJetCapFailsTheOracleCheckOnly) {
  AnchorOptions opt;
  opt.local.jet_cap = 2;
  opt.only = "X9";
  std::size_t failed = 0;
  for (const auto& r : run_anchors(opt)) {
    if (r.passed) continue;
    ++failed;
    EXPECT_EQ(r.id, "x9.mu_oracles");
    EXPECT_NE(r.detail.find("NotStabilized"), std::string::npos) << r.detail;
  }
  EXPECT_EQ(failed, 1u);
}
