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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncg/game.hpp"
#include "ncg/structure.hpp"
#include "ncg/verdict.hpp"

namespace ncg {

enum class CoveringPolicy { kLex2, kAll, kExplicit };

std::string_view covering_policy_name(CoveringPolicy p);

// J: for every node owning at least two links of H (the root excluded), a
// choice of at least two of those links, stored as sorted target lists.
struct TwoEdgeCovering {
  CoveringPolicy policy = CoveringPolicy::kLex2;
  Player root = 0;
  std::map<Player, std::vector<Player>> j;

  bool covers(Player v) const { return j.count(v) != 0; }
};

// Lex2 keeps the two smallest target ids, All keeps every owned in-H link,
// Explicit validates and adopts `explicit_map`.
TwoEdgeCovering make_covering(
    const OwnedGraph& g, const Component& h, Player root,
    CoveringPolicy policy,
    const std::map<Player, std::vector<Player>>& explicit_map = {});

// A^root_J(v) and its per-edge parts. `targets[i]` is v_i, the far end of
// e_i(v); `parts[i]` is A^root_{i,J}(v).
struct ASet {
  Player root = 0;
  Player owner = 0;
  std::vector<Player> targets;
  std::vector<Player> members;  // sorted, contains owner
  std::vector<std::vector<Player>> parts;
  std::vector<char> mask;       // size n

  bool contains(Player x) const { return mask.at(x) != 0; }
  std::size_t size() const { return members.size(); }
};

// x is in A iff x == v or every shortest root-x path leaves v through one of
// the links to `targets` (in the direction away from the root). Computed
// over all of G.
ASet a_set(const OwnedGraph& g, Player root, Player v,
           const std::vector<Player>& targets);
ASet a_set(const OwnedGraph& g, const TwoEdgeCovering& cov, Player v);

struct DominanceForest {
  Player root = 0;
  std::vector<Player> nodes;  // domain of the covering
  std::map<Player, ASet> sets;
  std::map<Player, Player> parent;
  std::map<Player, std::vector<Player>> children;
  std::map<Player, std::vector<Player>> aa;
  std::map<Player, int> aa_weight;  // |AA(v) ∩ V(H)|

  std::vector<Player> tree_roots() const;
  // Nodes of the tree rooted at r, in preorder.
  std::vector<Player> tree(Player r) const;
  std::vector<std::pair<Player, Player>> edges() const;
};

// Builds every A set, checks that any two are disjoint or nested (throws
// InvariantViolation with a witness otherwise), links each node to the
// smallest set strictly containing its own, and derives AA sets.
DominanceForest dominance_forest(const OwnedGraph& g, const Component& h,
                                 const TwoEdgeCovering& cov);

// Undirected edges xy of G with x in X, x != z, y in Y. X and Y are size-n
// masks; z = -1 disables the exclusion. Returned as (x, y).
std::vector<std::pair<Player, Player>> bridges(const OwnedGraph& g,
                                               const std::vector<char>& x,
                                               const std::vector<char>& y,
                                               Player z = -1);

std::vector<char> to_mask(int n, const std::vector<Player>& nodes);

// Z^w on parts 0..k-1: i ~ j iff bridges(A_i, A_j) is nonempty.
struct BridgeCliqueGraph {
  int k = 0;
  std::vector<std::vector<char>> adj;
  int max_clique = 0;
  int max_independent = 0;
};

// Throws GuardError for k > max_k.
BridgeCliqueGraph bridge_clique_graph(const OwnedGraph& g, const ASet& a,
                                      int max_k = 20);

// Per-site results of the shortest-path lemmas, which hold on any graph.
CheckResult check_nesting(const OwnedGraph& g, const DominanceForest& f);
CheckResult check_inclusion(const OwnedGraph& g, const DominanceForest& f);
CheckResult check_connectivity(const OwnedGraph& g, const DominanceForest& f);

// The component of A(w1) \ {w1} holding w2, as a mask.
std::vector<char> component_containing(const OwnedGraph& g, const ASet& a,
                                       Player w2);

// Leaves, interior nodes and maximal 2-paths of one forest tree, plus the
// split of far 2-node runs into blocks of l.
struct TreeAnatomy {
  Player root = 0;
  std::vector<Player> nodes;
  std::vector<Player> leaves;
  std::vector<Player> interior;
  std::vector<std::vector<Player>> two_paths;  // endpoints included
  std::vector<std::vector<Player>> full_blocks;
  std::vector<std::vector<Player>> short_blocks;
  std::vector<Player> near;  // d(u, v) <= L
};

TreeAnatomy tree_anatomy(const OwnedGraph& g, const DominanceForest& f,
                         Player tree_root, Distance big_l, int l);

Rational average_aa_weight(const DominanceForest& f, Player tree_root);

}  // namespace ncg
