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

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "ncg/error.hpp"
#include "ncg/families.hpp"
#include "ncg/structure.hpp"
#include "oracles.hpp"

namespace ncg {
namespace {

OwnedGraph graph_of(const StrategyVector& s) {
  return build_graph({s.size(), Rational(1)}, s);
}

TEST(Blocks, MatchOracleOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    int n = 3 + static_cast<int>(seed % 9);
    Rational p(static_cast<std::int64_t>(seed % 4) + 1, 6);
    auto s = random_strategy(n, p, Rational(1, 2), seed);
    auto g = graph_of(s);
    std::vector<std::vector<int>> got;
    for (const auto& h : nontrivial_components(g)) got.push_back(h.vertices);
    std::sort(got.begin(), got.end());
    auto adj = oracle::adjacency(n, s.all());
    EXPECT_EQ(got, oracle::cyclic_blocks(adj)) << "seed " << seed;

    int want = oracle::girth(adj);
    Distance gg = girth(g);
    if (want < 0) {
      EXPECT_EQ(gg, kUnreachable);
    } else {
      EXPECT_EQ(gg, want);
    }

    if (g.connected()) {
      for (const auto& h : nontrivial_components(g)) {
        int total = 0;
        for (Player v : h.vertices) {
          EXPECT_GE(h.hanging_weight[v], 1);
          total += h.hanging_weight[v];
        }
        EXPECT_EQ(total, n);
      }
    }
  }
}

TEST(Blocks, BridgesAreTrivialBlocks) {
  auto g = graph_of(path_strategy(4));
  auto all = biconnected_components(g);
  EXPECT_EQ(all.size(), 3u);
  EXPECT_TRUE(nontrivial_components(g).empty());
}

TEST(Blocks, ArticulationSplitsTwoTriangles) {
  // Triangles {0,1,2} and {2,3,4} sharing node 2, plus pendant 5 on 4.
  StrategyVector s({{1}, {2}, {0, 3}, {4}, {2, 5}, {}});
  auto g = graph_of(s);
  auto hs = nontrivial_components(g);
  ASSERT_EQ(hs.size(), 2u);
  EXPECT_EQ(hs[0].vertices, (std::vector<Player>{0, 1, 2}));
  EXPECT_EQ(hs[1].vertices, (std::vector<Player>{2, 3, 4}));
  EXPECT_EQ(hs[0].hanging_weight[2], 4);
  EXPECT_EQ(hs[1].hanging_weight[4], 2);
  EXPECT_EQ(hs[1].hanging_weight[2], 3);
}

TEST(TwoPaths, CycleIsOneClosedPath) {
  auto g = graph_of(cycle_strategy(6));
  auto h = nontrivial_components(g).at(0);
  auto ps = two_paths(g, h);
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_TRUE(ps[0].closed);
  EXPECT_TRUE(ps[0].oriented);
  EXPECT_EQ(ps[0].nodes.front(), 0);
  EXPECT_EQ(ps[0].nodes.back(), 0);
  EXPECT_EQ(ps[0].interior(), 5);
  EXPECT_TRUE(build_h3(g, h).empty());
  EXPECT_FALSE(avg_degrees(g, h).h3_form.has_value());
}

TEST(Theta, H3AndDegrees) {
  int n = 0;
  auto s = theta_strategy({2, 2, 3}, &n);
  ASSERT_EQ(n, 6);
  auto g = graph_of(s);
  auto hs = nontrivial_components(g);
  ASSERT_EQ(hs.size(), 1u);
  const auto& h = hs[0];
  auto h3 = build_h3(g, h);
  EXPECT_EQ(h3.vertices, (std::vector<Player>{0, 1}));
  std::vector<int> weights;
  for (const auto& e : h3.edges) {
    EXPECT_EQ(e.a, 0);
    EXPECT_EQ(e.b, 1);
    weights.push_back(e.weight);
  }
  EXPECT_EQ(weights, (std::vector<int>{1, 1, 2}));
  auto st = avg_degrees(g, h);
  EXPECT_EQ(st.avg_deg, Rational(7, 3));
  ASSERT_TRUE(st.h3_form.has_value());
  EXPECT_EQ(*st.h3_form, st.avg_deg);
  EXPECT_EQ(st.avg_out, Rational(7, 6));
  EXPECT_EQ(girth(g, h), 4);
  EXPECT_EQ(h.diameter, 2);
  for (const auto& p : two_paths(g, h)) EXPECT_TRUE(p.oriented);
}

TEST(Degrees, H3FormEqualsAverageOnBiconnectedGraphs) {
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 60 && seed < 2000; ++seed) {
    int n = 4 + static_cast<int>(seed % 8);
    auto s = random_strategy(n, Rational(2, 5), Rational(1, 2), seed);
    auto g = graph_of(s);
    auto hs = nontrivial_components(g);
    if (hs.size() != 1 || static_cast<int>(hs[0].vertices.size()) != n) continue;
    auto st = avg_degrees(g, hs[0]);
    if (!st.h3_form) continue;
    EXPECT_EQ(*st.h3_form, st.avg_deg) << "seed " << seed;
    ++checked;
  }
  EXPECT_EQ(checked, 60);
}

TEST(Degrees, LowerBoundFunction) {
  EXPECT_EQ(deg_lower_bound_value(Rational(3, 2)), Rational(2) + Rational(2, 221));
  EXPECT_EQ(deg_lower_bound_value(Rational(1)), Rational(2));
  EXPECT_THROW(deg_lower_bound_value(Rational(1, 2)), ValidationError);
}

TEST(Distances, LayersAndBeyond) {
  auto g = graph_of(cycle_strategy(7));
  auto h = nontrivial_components(g).at(0);
  auto layers = distance_layers(g, h, 0);
  ASSERT_EQ(layers.size(), 4u);
  EXPECT_EQ(layers[0], (std::vector<Player>{0}));
  EXPECT_EQ(layers[3], (std::vector<Player>{3, 4}));
  EXPECT_EQ(beyond(g, h, 0, 2), (std::vector<Player>{3, 4}));
  EXPECT_EQ(eccentricity(g, 0), 3);
  EXPECT_EQ(diameter(g), 3);
}

TEST(Distances, InducedSubgraph) {
  auto g = graph_of(cycle_strategy(6));
  std::vector<char> z(6, 1);
  z[1] = 0;
  EXPECT_EQ(induced_distance(g, z, 0, 2), 4);
  EXPECT_TRUE(induced_connected(g, z));
  z[4] = 0;
  EXPECT_EQ(induced_distance(g, z, 0, 2), kUnreachable);
  EXPECT_FALSE(induced_connected(g, z));
}

TEST(Distances, MinUsageNode) {
  auto g = graph_of(star_strategy(5));
  EXPECT_EQ(min_usage_node(g, make_component(g, {0, 1, 2, 3, 4})), 0);
  auto c = graph_of(cycle_strategy(5));
  EXPECT_EQ(min_usage_node(c, nontrivial_components(c).at(0)), 0);
}

}  // namespace
}  // namespace ncg
