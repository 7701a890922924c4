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

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "ncg/rational.hpp"

namespace ncg {

using Player = int;

// Hop distance; kUnreachable marks pairs in different connected components.
using Distance = int;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

struct GameConfig {
  int n = 1;
  Rational alpha = Rational(1);

  // Throws ValidationError unless n >= 1 and alpha > 0.
  void validate() const;
};

// Ownership pair: `owner` bought the link to `target`.
struct OwnedEdge {
  Player owner = 0;
  Player target = 0;

  friend auto operator<=>(const OwnedEdge&, const OwnedEdge&) = default;
};

// s = (s_u) for u in [0, n). Each buys[u] is kept sorted and duplicate-free.
class StrategyVector {
 public:
  StrategyVector() = default;
  explicit StrategyVector(int n);
  // Sorts and deduplicates every per-player set. Does not validate ranges;
  // call validate() for that.
  explicit StrategyVector(std::vector<std::vector<Player>> buys);

  static StrategyVector from_edges(int n, std::span<const OwnedEdge> edges);

  int size() const { return static_cast<int>(buys_.size()); }
  const std::vector<Player>& buys(Player u) const { return buys_.at(u); }
  const std::vector<std::vector<Player>>& all() const { return buys_; }

  bool owns(Player u, Player v) const;
  void add(Player u, Player v);
  void remove(Player u, Player v);
  void set(Player u, std::vector<Player> targets);

  // All ownership pairs, sorted by (owner, target).
  std::vector<OwnedEdge> edges() const;
  std::size_t edge_count() const;

  // Throws ValidationError on self purchase or an out-of-range target, or
  // when the vector length differs from n.
  void validate(int n) const;

  friend bool operator==(const StrategyVector&,
                         const StrategyVector&) = default;
  friend auto operator<=>(const StrategyVector&,
                          const StrategyVector&) = default;

 private:
  std::vector<std::vector<Player>> buys_;
};

// The communication graph G_s: ownership digraph, its undirected symmetric
// closure, and the all-pairs hop-distance matrix computed at construction.
class OwnedGraph {
 public:
  OwnedGraph() = default;

  int n() const { return n_; }
  const std::vector<Player>& owned(Player u) const { return owned_.at(u); }
  const std::vector<Player>& neighbors(Player u) const {
    return adjacency_.at(u);
  }
  bool adjacent(Player u, Player v) const;
  bool owns(Player u, Player v) const;
  // Number of players owning the undirected edge uv (0, 1 or 2).
  int owner_count(Player u, Player v) const;

  const std::vector<OwnedEdge>& owned_edges() const { return owned_edges_; }
  // Undirected edges as (a, b) with a < b, sorted.
  const std::vector<std::pair<Player, Player>>& edges() const {
    return edges_;
  }

  Distance dist(Player u, Player v) const {
    return dist_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const Distance> dist_row(Player u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * n_,
            static_cast<std::size_t>(n_)};
  }

  bool connected() const { return connected_; }
  bool is_tree() const;

  friend OwnedGraph build_graph(const GameConfig& cfg,
                                const StrategyVector& s);

 private:
  int n_ = 0;
  std::vector<std::vector<Player>> owned_;
  std::vector<std::vector<Player>> adjacency_;
  std::vector<OwnedEdge> owned_edges_;
  std::vector<std::pair<Player, Player>> edges_;
  std::vector<Distance> dist_;
  bool connected_ = true;
};

struct CostReport {
  std::vector<Rational> creation;     // alpha * |s_u|
  std::vector<ExtRational> usage;     // D(u), +inf when some v unreachable
  std::vector<ExtRational> total;     // c_u(s)
  ExtRational social;                 // c(s)
  bool connected = true;

  friend bool operator==(const CostReport&, const CostReport&) = default;
};

// Hop distances from `source` over an adjacency list; kUnreachable for nodes
// not reached.
std::vector<Distance> bfs_distances(
    const std::vector<std::vector<Player>>& adjacency, Player source);

OwnedGraph build_graph(const GameConfig& cfg, const StrategyVector& s);
StrategyVector extract_strategy(const OwnedGraph& g);

CostReport cost(const GameConfig& cfg, const OwnedGraph& g);
ExtRational usage_cost(const OwnedGraph& g, Player u);
// alpha * |s_u| + D(u).
ExtRational player_cost(const GameConfig& cfg, const OwnedGraph& g, Player u);

}  // namespace ncg
