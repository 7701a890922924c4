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

#include "ncg/game.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "ncg/error.hpp"

namespace ncg {

void GameConfig::validate() const {
  if (n < 1) throw ValidationError("n must be >= 1, got " + std::to_string(n));
  if (alpha.sign() <= 0) {
    throw ValidationError("alpha must be positive, got " + alpha.to_string());
  }
}

StrategyVector::StrategyVector(int n) : buys_(static_cast<std::size_t>(n)) {}

StrategyVector::StrategyVector(std::vector<std::vector<Player>> buys)
    : buys_(std::move(buys)) {
  for (auto& targets : buys_) {
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  }
}

StrategyVector StrategyVector::from_edges(int n,
                                          std::span<const OwnedEdge> edges) {
  std::vector<std::vector<Player>> buys(static_cast<std::size_t>(n));
  for (const auto& e : edges) {
    if (e.owner < 0 || e.owner >= n) {
      throw ValidationError("owner out of range: " + std::to_string(e.owner));
    }
    buys[e.owner].push_back(e.target);
  }
  return StrategyVector(std::move(buys));
}

bool StrategyVector::owns(Player u, Player v) const {
  const auto& t = buys_.at(u);
  return std::binary_search(t.begin(), t.end(), v);
}

void StrategyVector::add(Player u, Player v) {
  auto& t = buys_.at(u);
  auto it = std::lower_bound(t.begin(), t.end(), v);
  if (it == t.end() || *it != v) t.insert(it, v);
}

void StrategyVector::remove(Player u, Player v) {
  auto& t = buys_.at(u);
  auto it = std::lower_bound(t.begin(), t.end(), v);
  if (it != t.end() && *it == v) t.erase(it);
}

void StrategyVector::set(Player u, std::vector<Player> targets) {
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  buys_.at(u) = std::move(targets);
}

std::vector<OwnedEdge> StrategyVector::edges() const {
  std::vector<OwnedEdge> out;
  for (Player u = 0; u < size(); ++u) {
    for (Player v : buys_[u]) out.push_back({u, v});
  }
  return out;
}

std::size_t StrategyVector::edge_count() const {
  std::size_t count = 0;
  for (const auto& t : buys_) count += t.size();
  return count;
}

void StrategyVector::validate(int n) const {
  if (size() != n) {
    throw ValidationError("strategy vector has " + std::to_string(size()) +
                          " players, expected " + std::to_string(n));
  }
  for (Player u = 0; u < n; ++u) {
    for (Player v : buys_[u]) {
      if (v == u) {
        throw ValidationError("player " + std::to_string(u) +
                              " buys a link to itself");
      }
      if (v < 0 || v >= n) {
        throw ValidationError("player " + std::to_string(u) +
                              " buys out-of-range target " +
                              std::to_string(v));
      }
    }
  }
}

bool OwnedGraph::adjacent(Player u, Player v) const {
  const auto& a = adjacency_.at(u);
  return std::binary_search(a.begin(), a.end(), v);
}

bool OwnedGraph::owns(Player u, Player v) const {
  const auto& o = owned_.at(u);
  return std::binary_search(o.begin(), o.end(), v);
}

int OwnedGraph::owner_count(Player u, Player v) const {
  return static_cast<int>(owns(u, v)) + static_cast<int>(owns(v, u));
}

bool OwnedGraph::is_tree() const {
  return connected_ && edges_.size() + 1 == static_cast<std::size_t>(n_);
}

std::vector<Distance> bfs_distances(
    const std::vector<std::vector<Player>>& adjacency, Player source) {
  std::vector<Distance> dist(adjacency.size(), kUnreachable);
  std::vector<Player> queue;
  queue.reserve(adjacency.size());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Player x = queue[head];
    for (Player y : adjacency[x]) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

OwnedGraph build_graph(const GameConfig& cfg, const StrategyVector& s) {
  cfg.validate();
  s.validate(cfg.n);
  const int n = cfg.n;

  OwnedGraph g;
  g.n_ = n;
  g.owned_ = s.all();
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  for (Player u = 0; u < n; ++u) {
    for (Player v : s.buys(u)) {
      g.owned_edges_.push_back({u, v});
      g.adjacency_[u].push_back(v);
      g.adjacency_[v].push_back(u);
    }
  }
  for (Player u = 0; u < n; ++u) {
    auto& a = g.adjacency_[u];
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    for (Player v : a) {
      if (u < v) g.edges_.emplace_back(u, v);
    }
  }

  g.dist_.assign(static_cast<std::size_t>(n) * n, kUnreachable);
  for (Player u = 0; u < n; ++u) {
    auto row = bfs_distances(g.adjacency_, u);
    std::copy(row.begin(), row.end(),
              g.dist_.begin() + static_cast<std::ptrdiff_t>(u) * n);
  }
  g.connected_ = std::none_of(g.dist_.begin(), g.dist_.end(),
                              [](Distance d) { return d == kUnreachable; });
  return g;
}

StrategyVector extract_strategy(const OwnedGraph& g) {
  std::vector<std::vector<Player>> buys(static_cast<std::size_t>(g.n()));
  for (Player u = 0; u < g.n(); ++u) buys[u] = g.owned(u);
  return StrategyVector(std::move(buys));
}

ExtRational usage_cost(const OwnedGraph& g, Player u) {
  if (u < 0 || u >= g.n()) {
    throw ValidationError("player out of range: " + std::to_string(u));
  }
  std::int64_t sum = 0;
  for (Distance d : g.dist_row(u)) {
    if (d == kUnreachable) return ExtRational::infinity();
    sum += d;
  }
  return ExtRational(Rational(sum));
}

ExtRational player_cost(const GameConfig& cfg, const OwnedGraph& g,
                        Player u) {
  Rational creation =
      cfg.alpha * Rational(static_cast<std::int64_t>(g.owned(u).size()));
  return ExtRational(creation) + usage_cost(g, u);
}

CostReport cost(const GameConfig& cfg, const OwnedGraph& g) {
  CostReport report;
  report.connected = g.connected();
  ExtRational social(0);
  for (Player u = 0; u < g.n(); ++u) {
    Rational creation =
        cfg.alpha * Rational(static_cast<std::int64_t>(g.owned(u).size()));
    report.creation.push_back(creation);
    ExtRational usage = report.connected ? usage_cost(g, u)
                                         : ExtRational::infinity();
    report.usage.push_back(usage);
    report.total.push_back(ExtRational(creation) + usage);
    social = social + report.total.back();
  }
  report.social = social;
  return report;
}

}  // namespace ncg
