// Copyright 2026 The ncglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <set>
#include <string>

#include <gtest/gtest.h>

#include "controls.hpp"
#include "ncg/error.hpp"
#include "ncg/families.hpp"
#include "ncg/search.hpp"
#include "ncg/verifiers.hpp"

namespace ncg {
namespace {

TEST(Thresholds, ExactValues) {
  GameConfig cfg{10, Rational(20)};
  VerifierConfig vc;
  EXPECT_EQ(rho(cfg), Rational(2));
  EXPECT_EQ(leaf_threshold(cfg, vc), Rational(18));
  EXPECT_EQ(far_threshold(cfg, vc), Rational(9));
  EXPECT_EQ(two_path_min_l(cfg, vc), 6);

  vc.k = Rational(3);
  GameConfig loose{4, Rational(12)};
  EXPECT_EQ(rho(loose), Rational(3, 2));
  EXPECT_EQ(leaf_threshold(loose, vc), Rational(27 + 12 + 2));
  EXPECT_EQ(far_threshold(loose, vc), Rational(19));
  EXPECT_EQ(two_path_min_l(loose, vc), 5);

  EXPECT_THROW(rho(GameConfig{10, Rational(10)}), ValidationError);
}

TEST(Registry, SortedAndComplete) {
  std::set<std::string> want = {
      "buy_link_bound", "connectivity", "deg_lower_bound", "degree_cap",
      "diameter_gap",   "girth",        "h3_weight_cap",   "inclusion",
      "leaf_weight",    "nesting",      "poa_depth",       "sac",
      "simple_bridge",  "tec",          "two_path_aa",     "two_path_bound"};
  std::set<std::string> got;
  std::string prev;
  for (const auto& c : checker_registry()) {
    EXPECT_LT(prev, c.id);
    prev = c.id;
    EXPECT_FALSE(c.claim.empty());
    got.insert(c.id);
  }
  EXPECT_EQ(got, want);
  EXPECT_THROW(find_checker("nope"), ValidationError);
}

TEST(Config, StandardFlag) {
  VerifierConfig vc;
  EXPECT_TRUE(vc.standard());
  vc.k = Rational(5);
  vc.covering = CoveringPolicy::kAll;
  EXPECT_TRUE(vc.standard());
  vc.two_path_cap = 10;
  EXPECT_FALSE(vc.standard());
  VerifierConfig rooted;
  rooted.root_override = 0;
  EXPECT_FALSE(rooted.standard());
}

class NegativeControlTest
    : public ::testing::TestWithParam<testing::NegativeControl> {};

TEST_P(NegativeControlTest, ReportsViolated) {
  const auto& c = GetParam();
  auto report = run_suite(c.cfg, c.s, c.vc, {c.checker}, true);
  ASSERT_EQ(report.results.size(), 1u);
  const auto& r = report.results[0];
  EXPECT_EQ(r.verdict, Verdict::kViolated)
      << c.description << "\n" << r.to_json().dump(2);
  EXPECT_FALSE(r.witness.empty());
  EXPECT_TRUE(report.any_violated());
}

INSTANTIATE_TEST_SUITE_P(
    Controls, NegativeControlTest,
    ::testing::ValuesIn(testing::graph_negative_controls()),
    [](const ::testing::TestParamInfo<testing::NegativeControl>& info) {
      return info.param.checker;
    });

TEST(Gate, UnverifiedInputIsNotJudged) {
  auto report = run_suite({80, Rational(1)}, cycle_strategy(80), {},
                          {"two_path_bound"}, false);
  EXPECT_FALSE(report.ne_verified);
  EXPECT_EQ(report.results.at(0).verdict, Verdict::kPreconditionNotMet);
  EXPECT_FALSE(report.results.at(0).nonstandard);

  auto forced = run_suite({80, Rational(1)}, cycle_strategy(80), {},
                          {"two_path_bound"}, true);
  EXPECT_TRUE(forced.results.at(0).nonstandard);
  EXPECT_TRUE(forced.nonstandard);
}

TEST(Gate, NonEquilibriumSmallInputRejected) {
  auto report = run_suite({3, Rational(2)}, cycle_strategy(3), {}, {}, false);
  EXPECT_FALSE(report.ne_verified);
  for (const auto& r : report.results) {
    if (r.id == "nesting" || r.id == "inclusion" || r.id == "connectivity") {
      continue;
    }
    EXPECT_EQ(r.verdict, Verdict::kPreconditionNotMet) << r.id;
  }
}

TEST(Suite, RejectsNonPositiveK) {
  VerifierConfig vc;
  vc.k = Rational(0);
  EXPECT_THROW(run_suite({3, Rational(1)}, star_strategy(3), vc), ValidationError);
}

TEST(Suite, SacAtValidatesZ) {
  auto ctx = VerifyContext::make({6, Rational(1)}, cycle_strategy(6), {}, true);
  const auto& h = ctx.components.at(0);
  EXPECT_THROW(check_sac_at(ctx, h, {}, 0), ValidationError);
  EXPECT_THROW(check_sac_at(ctx, h, {0, 3}, 1), ValidationError);
  EXPECT_NO_THROW(check_sac_at(ctx, h, {0, 1}, 1));
}

TEST(Suite, CatalogEquilibriaNeverViolate) {
  for (int n = 3; n <= 5; ++n) {
    for (Rational a : {Rational(1, 2), Rational(3, 2), Rational(3),
                       Rational(n + 1), Rational(2 * n)}) {
      EnumerationConfig ec;
      ec.n = n;
      ec.alpha = a;
      auto cat = enumerate_nash(ec);
      for (const auto& e : cat.entries) {
        for (auto policy : {CoveringPolicy::kLex2, CoveringPolicy::kAll}) {
          VerifierConfig vc;
          vc.covering = policy;
          auto rep = run_suite(cat.cfg, e.s, vc);
          EXPECT_TRUE(rep.ne_verified);
          EXPECT_FALSE(rep.nonstandard);
          EXPECT_FALSE(rep.any_violated()) << rep.to_json().dump(2);
        }
      }
    }
  }
}

TEST(Suite, ReportJsonShape) {
  auto rep = run_suite({4, Rational(5)}, star_strategy(4), {});
  auto j = rep.to_json();
  ASSERT_TRUE(j.contains("results"));
  for (const auto& r : j["results"]) {
    for (const char* key : {"id", "claim", "verdict", "witness", "nonstandard",
                            "details"}) {
      EXPECT_TRUE(r.contains(key)) << key;
    }
  }
}

}  // namespace
}  // namespace ncg
