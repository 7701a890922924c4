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

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <gtest/gtest.h>

#include "controls.hpp"
#include "ncg/asets.hpp"
#include "ncg/error.hpp"
#include "ncg/families.hpp"
#include "oracles.hpp"

namespace ncg {
namespace {

OwnedGraph graph_of(const StrategyVector& s) {
  return build_graph({s.size(), Rational(1)}, s);
}

// Biconnected on 0..6: 0 owns {1,6}, 1 owns {2,3}, 2 owns {4,5}, 3-4, 5-6.
// Rooted at 0, A(2) = {2} sits inside A(1) = {1,2,3,4}.
StrategyVector chain_fixture() {
  return StrategyVector({{1, 6}, {2, 3}, {4, 5}, {4}, {}, {6}, {}});
}

TEST(Covering, Policies) {
  // 0 owns links to 3, 7 and 9 inside the 4-node block {0,3,7,9}.
  StrategyVector s(10);
  s.set(0, {3, 7, 9});
  s.add(3, 7);
  s.add(7, 9);
  for (Player p : {1, 2, 4, 5, 6, 8}) s.add(7, p);
  auto g = graph_of(s);
  auto h = nontrivial_components(g).at(0);
  ASSERT_EQ(h.vertices, (std::vector<Player>{0, 3, 7, 9}));

  auto lex = make_covering(g, h, 3, CoveringPolicy::kLex2);
  EXPECT_EQ(lex.j.at(0), (std::vector<Player>{3, 7}));
  EXPECT_FALSE(lex.covers(3));
  EXPECT_FALSE(lex.covers(7));
  auto all = make_covering(g, h, 3, CoveringPolicy::kAll);
  EXPECT_EQ(all.j.at(0), (std::vector<Player>{3, 7, 9}));

  auto ex = make_covering(g, h, 3, CoveringPolicy::kExplicit, {{0, {7, 9}}});
  EXPECT_EQ(ex.j.at(0), (std::vector<Player>{7, 9}));
  EXPECT_THROW(make_covering(g, h, 3, CoveringPolicy::kExplicit, {{0, {7}}}),
               ValidationError);
  EXPECT_THROW(make_covering(g, h, 3, CoveringPolicy::kExplicit, {{0, {7, 1}}}),
               ValidationError);
  EXPECT_THROW(make_covering(g, h, 3, CoveringPolicy::kExplicit, {}),
               ValidationError);
}

TEST(ASetTest, FourCycleBothNeighborsCloser) {
  // u = 0, a = 1, v = 2, b = 3.
  auto g = graph_of(StrategyVector({{1, 3}, {}, {1, 3}, {}}));
  auto a = a_set(g, 0, 2, {1, 3});
  EXPECT_EQ(a.members, (std::vector<Player>{2}));
  ASSERT_EQ(a.parts.size(), 2u);
  EXPECT_TRUE(a.parts[0].empty());
  EXPECT_TRUE(a.parts[1].empty());
}

TEST(ASetTest, UniqueShortestPathCaptured) {
  auto g = graph_of(StrategyVector({{1}, {2, 3}, {3}, {}}));
  auto a = a_set(g, 0, 1, {2, 3});
  EXPECT_EQ(a.members, (std::vector<Player>{1, 2, 3}));
  EXPECT_EQ(a.parts[0], (std::vector<Player>{2}));
  EXPECT_EQ(a.parts[1], (std::vector<Player>{3}));
  EXPECT_FALSE(a.contains(0));
}

// The far end of e_i(v) lies one step farther from u than v, yet A_i is
// empty because a second shortest path reaches it without using v.
TEST(ASetTest, FartherTargetCanStillGiveEmptyPart) {
  // 0-1-2 and 0-5-6-3; 2 owns {3, 4}.
  auto g = graph_of(StrategyVector({{1, 5}, {2}, {3, 4}, {}, {}, {6}, {3}}));
  ASSERT_EQ(g.dist(0, 3), g.dist(0, 2) + 1);
  auto a = a_set(g, 0, 2, {3, 4});
  EXPECT_TRUE(a.parts[0].empty());
  EXPECT_EQ(a.parts[1], (std::vector<Player>{4}));
  EXPECT_EQ(a.members, (std::vector<Player>{2, 4}));
}

TEST(ASetTest, MatchesOracleOnRandomGraphs) {
  int compared = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    int n = 4 + static_cast<int>(seed % 6);
    auto s = random_strategy(n, Rational(2, 5), Rational(1, 2), seed);
    auto g = graph_of(s);
    auto adj = oracle::adjacency(n, s.all());
    for (Player root = 0; root < n; ++root) {
      for (Player v = 0; v < n; ++v) {
        const auto& t = s.buys(v);
        if (v == root || t.size() < 2) continue;
        auto got = a_set(g, root, v, t);
        auto want = oracle::a_set(adj, root, v, t);
        ASSERT_EQ(got.members, want.members)
            << "seed " << seed << " root " << root << " v " << v;
        ASSERT_EQ(got.parts, want.parts);
        EXPECT_FALSE(got.contains(root));
        for (std::size_t i = 0; i < t.size(); ++i) {
          Distance dv = g.dist(root, v);
          Distance di = g.dist(root, t[i]);
          if (!got.parts[i].empty()) {
            EXPECT_EQ(di, dv + 1);
          }
          if (dv != kUnreachable && di <= dv) {
            EXPECT_TRUE(got.parts[i].empty());
          }
        }
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 300);
}

TEST(Forest, ChainFixture) {
  auto g = graph_of(chain_fixture());
  auto h = nontrivial_components(g).at(0);
  ASSERT_EQ(h.vertices.size(), 7u);
  auto cov = make_covering(g, h, 0, CoveringPolicy::kLex2);
  auto f = dominance_forest(g, h, cov);
  EXPECT_EQ(f.nodes, (std::vector<Player>{1, 2}));
  EXPECT_EQ(f.sets.at(1).members, (std::vector<Player>{1, 2, 3, 4}));
  EXPECT_EQ(f.sets.at(2).members, (std::vector<Player>{2}));
  EXPECT_EQ(f.edges(), (std::vector<std::pair<Player, Player>>{{1, 2}}));
  EXPECT_EQ(f.aa.at(1), (std::vector<Player>{1, 3, 4}));
  EXPECT_EQ(f.aa_weight.at(1), 3);
  EXPECT_EQ(f.aa_weight.at(2), 1);
  EXPECT_EQ(f.tree_roots(), (std::vector<Player>{1}));
  EXPECT_EQ(average_aa_weight(f, 1), Rational(2));
  EXPECT_EQ(check_nesting(g, f).verdict, Verdict::kHolds);
  EXPECT_EQ(check_inclusion(g, f).verdict, Verdict::kHolds);
}

TEST(Forest, SingleCycle) {
  auto g = graph_of(testing::cycle_with_owners(7, {4}));
  auto h = nontrivial_components(g).at(0);
  auto f = dominance_forest(g, h, make_covering(g, h, 0, CoveringPolicy::kLex2));
  EXPECT_EQ(f.nodes, (std::vector<Player>{4}));
  EXPECT_TRUE(f.edges().empty());

  auto plain = graph_of(cycle_strategy(7));
  auto hp = nontrivial_components(plain).at(0);
  EXPECT_TRUE(dominance_forest(plain, hp,
                               make_covering(plain, hp, 0, CoveringPolicy::kLex2))
                  .nodes.empty());
}

// Parent = smallest A set strictly containing A(v); AA sets partition each
// root's A set inside H; non-owner AA members own at most one link of H.
TEST(Forest, PropertiesOnRandomGraphs) {
  int forests = 0;
  for (std::uint64_t seed = 1; seed <= 250; ++seed) {
    int n = 5 + static_cast<int>(seed % 8);
    auto s = random_strategy(n, Rational(2, 5), Rational(1, 2), seed * 7);
    auto g = graph_of(s);
    auto adj = oracle::adjacency(n, s.all());
    for (const auto& h : nontrivial_components(g)) {
      Player root = min_usage_node(g, h);
      for (auto policy : {CoveringPolicy::kLex2, CoveringPolicy::kAll}) {
        auto cov = make_covering(g, h, root, policy);
        auto f = dominance_forest(g, h, cov);
        ++forests;
        std::map<Player, std::vector<int>> sets;
        for (Player v : f.nodes) sets[v] = oracle::a_set(adj, root, v, cov.j.at(v)).members;
        for (Player v : f.nodes) {
          std::optional<Player> best;
          for (Player w : f.nodes) {
            if (w == v) continue;
            const auto& big = sets[w];
            bool contains = sets[v].size() < big.size() &&
                            std::includes(big.begin(), big.end(),
                                          sets[v].begin(), sets[v].end());
            if (contains && (!best || big.size() < sets[*best].size())) best = w;
          }
          auto it = f.parent.find(v);
          if (best) {
            ASSERT_NE(it, f.parent.end());
            EXPECT_EQ(it->second, *best);
          } else {
            EXPECT_EQ(it, f.parent.end());
          }
          for (Player x : f.aa.at(v)) {
            if (x == v || !h.contains(x)) continue;
            int out = 0;
            for (Player y : h.adjacency[x]) out += g.owns(x, y) ? 1 : 0;
            EXPECT_LE(out, 1);
          }
        }
        for (Player r : f.tree_roots()) {
          int in_h = 0;
          for (Player x : sets[r]) in_h += h.contains(x) ? 1 : 0;
          int sum = 0;
          for (Player v : f.tree(r)) sum += f.aa_weight.at(v);
          EXPECT_EQ(sum, in_h);
        }
        EXPECT_EQ(check_nesting(g, f).verdict != Verdict::kViolated, true);
        EXPECT_NE(check_inclusion(g, f).verdict, Verdict::kViolated);
        EXPECT_NE(check_connectivity(g, f).verdict, Verdict::kViolated);
      }
    }
  }
  EXPECT_GT(forests, 100);
}

TEST(Forest, TamperedForestsAreCaught) {
  auto nest = testing::tampered_forest_nesting();
  EXPECT_EQ(check_nesting(nest.g, nest.forest).verdict, Verdict::kViolated);
  auto inc = testing::tampered_forest_inclusion();
  EXPECT_EQ(check_inclusion(inc.g, inc.forest).verdict, Verdict::kViolated);
  auto con = testing::tampered_forest_connectivity();
  EXPECT_EQ(check_connectivity(con.g, con.forest).verdict, Verdict::kViolated);
}

TEST(Bridges, Basics) {
  auto g = graph_of(cycle_strategy(6));
  EXPECT_TRUE(bridges(g, to_mask(6, {0}), to_mask(6, {3})).empty());
  EXPECT_TRUE(bridges(g, to_mask(6, {0}), to_mask(6, {1, 5}), 0).empty());
  auto e = bridges(g, to_mask(6, {0, 1, 2}), to_mask(6, {3, 4, 5}));
  EXPECT_EQ(e, (std::vector<std::pair<Player, Player>>{{0, 5}, {2, 3}}));
}

TEST(Bridges, ThetaCut) {
  int n = 0;
  auto g = graph_of(theta_strategy({2, 2, 2}, &n));
  // Hub 0 with its three leg neighbours against hub 1.
  auto e = bridges(g, to_mask(n, {0, 2, 3, 4}), to_mask(n, {1}));
  EXPECT_EQ(e.size(), 3u);
}

TEST(Bridges, CliqueGraph) {
  StrategyVector s({{1}, {2, 3, 4}, {}, {}, {}});
  auto g = graph_of(s);
  auto a = a_set(g, 0, 1, {2, 3, 4});
  auto z = bridge_clique_graph(g, a);
  EXPECT_EQ(z.k, 3);
  EXPECT_EQ(z.max_clique, 1);
  EXPECT_EQ(z.max_independent, 3);

  s.add(2, 3);
  s.add(3, 4);
  s.add(4, 2);
  auto g2 = graph_of(s);
  auto z2 = bridge_clique_graph(g2, a_set(g2, 0, 1, {2, 3, 4}));
  EXPECT_EQ(z2.max_clique, 3);
  EXPECT_EQ(z2.max_independent, 1);
  EXPECT_THROW(bridge_clique_graph(g2, a_set(g2, 0, 1, {2, 3, 4}), 2), GuardError);
}

TEST(Anatomy, BlocksOfChain) {
  auto g = graph_of(path_strategy(10));
  DominanceForest f;
  f.root = 0;
  for (Player v = 1; v <= 9; ++v) {
    f.nodes.push_back(v);
    f.aa_weight[v] = 1;
    if (v > 1) {
      f.parent[v] = v - 1;
      f.children[v - 1].push_back(v);
    }
  }
  auto t = tree_anatomy(g, f, 1, 0, 3);
  EXPECT_EQ(t.leaves, (std::vector<Player>{9}));
  EXPECT_EQ(t.interior, (std::vector<Player>{1}));
  ASSERT_EQ(t.two_paths.size(), 1u);
  EXPECT_EQ(t.two_paths[0].size(), 9u);
  EXPECT_EQ(t.full_blocks,
            (std::vector<std::vector<Player>>{{2, 3, 4}, {5, 6, 7}}));
  EXPECT_EQ(t.short_blocks, (std::vector<std::vector<Player>>{{8}}));
  EXPECT_LE(t.interior.size(), t.leaves.size());
  EXPECT_EQ(average_aa_weight(f, 1), Rational(1));

  auto near = tree_anatomy(g, f, 1, 4, 3);
  EXPECT_EQ(near.near, (std::vector<Player>{1, 2, 3, 4}));
  EXPECT_EQ(near.full_blocks, (std::vector<std::vector<Player>>{{5, 6, 7}}));
  EXPECT_EQ(near.short_blocks, (std::vector<std::vector<Player>>{{8}}));
}

}  // namespace
}  // namespace ncg
