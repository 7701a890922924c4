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

// Slow reference implementations used to derive expected values. They share
// no code with the library beyond Rational and the strategy container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ncg/game.hpp"

namespace ncg::oracle {

using Adj = std::vector<std::vector<int>>;

inline Adj adjacency(int n, const std::vector<std::vector<int>>& buys) {
  std::vector<std::set<int>> sets(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v : buys[u]) {
      sets[u].insert(v);
      sets[v].insert(u);
    }
  }
  Adj adj(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) adj[u].assign(sets[u].begin(), sets[u].end());
  return adj;
}

inline std::vector<int> bfs(const Adj& adj, int src) {
  std::vector<int> d(adj.size(), -1);
  std::vector<int> q{src};
  d[src] = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (int y : adj[q[i]]) {
      if (d[y] < 0) {
        d[y] = d[q[i]] + 1;
        q.push_back(y);
      }
    }
  }
  return d;
}

// nullopt encodes an infinite cost.
inline std::optional<Rational> player_cost(int n, const Rational& alpha,
                                           const std::vector<std::vector<int>>& buys,
                                           int u) {
  auto d = bfs(adjacency(n, buys), u);
  std::int64_t sum = 0;
  for (int x : d) {
    if (x < 0) return std::nullopt;
    sum += x;
  }
  return alpha * Rational(static_cast<std::int64_t>(buys[u].size())) + Rational(sum);
}

inline bool better(const std::optional<Rational>& a,
                   const std::optional<Rational>& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

// Minimum cost of u over all 2^(n-1) strategies.
inline std::optional<Rational> best_cost(int n, const Rational& alpha,
                                         std::vector<std::vector<int>> buys,
                                         int u) {
  std::vector<int> others;
  for (int x = 0; x < n; ++x) {
    if (x != u) others.push_back(x);
  }
  std::optional<Rational> best;
  bool first = true;
  for (std::uint32_t m = 0; m < (1u << others.size()); ++m) {
    buys[u].clear();
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (m >> i & 1) buys[u].push_back(others[i]);
    }
    auto c = player_cost(n, alpha, buys, u);
    if (first || better(c, best)) best = c;
    first = false;
  }
  return best;
}

inline bool is_nash(int n, const Rational& alpha,
                    const std::vector<std::vector<int>>& buys) {
  for (int u = 0; u < n; ++u) {
    auto cur = player_cost(n, alpha, buys, u);
    auto best = best_cost(n, alpha, buys, u);
    if (better(best, cur)) return false;
  }
  return true;
}

inline std::vector<std::vector<int>> all_shortest_paths(const Adj& adj, int a,
                                                        int b) {
  auto da = bfs(adj, a);
  auto db = bfs(adj, b);
  std::vector<std::vector<int>> out;
  if (da[b] < 0) return out;
  std::vector<int> path{a};
  std::function<void(int)> walk = [&](int x) {
    if (x == b) {
      out.push_back(path);
      return;
    }
    for (int y : adj[x]) {
      if (da[y] == da[x] + 1 && db[y] == db[x] - 1) {
        path.push_back(y);
        walk(y);
        path.pop_back();
      }
    }
  };
  walk(a);
  return out;
}

// x is in A iff x == v or every shortest root-x path steps v -> t for some
// t in targets. parts[i]: members with some shortest path stepping
// v -> targets[i].
struct ASetOracle {
  std::vector<int> members;
  std::vector<std::vector<int>> parts;
};

inline ASetOracle a_set(const Adj& adj, int root, int v,
                        const std::vector<int>& targets) {
  const int n = static_cast<int>(adj.size());
  ASetOracle out;
  out.parts.resize(targets.size());
  auto steps = [&](const std::vector<int>& p, int t) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] == v && p[i + 1] == t) return true;
    }
    return false;
  };
  for (int x = 0; x < n; ++x) {
    auto paths = all_shortest_paths(adj, root, x);
    bool in = x == v;
    if (!in && !paths.empty()) {
      in = std::all_of(paths.begin(), paths.end(), [&](const auto& p) {
        return std::any_of(targets.begin(), targets.end(),
                           [&](int t) { return steps(p, t); });
      });
    }
    if (!in) continue;
    out.members.push_back(x);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (std::any_of(paths.begin(), paths.end(),
                      [&](const auto& p) { return steps(p, targets[i]); })) {
        out.parts[i].push_back(x);
      }
    }
  }
  return out;
}

// Every simple cycle, as vertex sequences (each cycle reported once per
// start/direction is fine for the uses below).
inline std::vector<std::vector<int>> simple_cycles(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> walk = [&](int start, int x) {
    for (int y : adj[x]) {
      if (y == start && path.size() >= 3) {
        out.push_back(path);
      } else if (y > start && !on[y]) {
        on[y] = 1;
        path.push_back(y);
        walk(start, y);
        path.pop_back();
        on[y] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on[s] = 1;
    walk(s, s);
    on[s] = 0;
  }
  return out;
}

// Vertex sets of blocks that contain a cycle, sorted.
inline std::vector<std::vector<int>> cyclic_blocks(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b : adj[a]) {
      if (a < b) edges.emplace_back(a, b);
    }
  }
  auto index = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<int>(std::find(edges.begin(), edges.end(),
                                      std::make_pair(a, b)) -
                            edges.begin());
  };
  std::vector<int> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::vector<char> cyclic(edges.size(), 0);
  for (const auto& c : simple_cycles(adj)) {
    int first = index(c.back(), c.front());
    cyclic[first] = 1;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      int e = index(c[i], c[i + 1]);
      cyclic[e] = 1;
      parent[find(e)] = find(first);
    }
  }
  std::vector<std::set<int>> groups(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!cyclic[e]) continue;
    groups[find(static_cast<int>(e))].insert(edges[e].first);
    groups[find(static_cast<int>(e))].insert(edges[e].second);
  }
  std::vector<std::vector<int>> out;
  for (const auto& g : groups) {
    if (!g.empty()) out.emplace_back(g.begin(), g.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int girth(const Adj& adj) {
  int best = -1;
  for (const auto& c : simple_cycles(adj)) {
    int len = static_cast<int>(c.size());
    if (best < 0 || len < best) best = len;
  }
  return best;
}

// Minimum social cost over every undirected graph on n nodes.
inline Rational opt(int n, const Rational& alpha) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::optional<Rational> best;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    Adj adj(static_cast<std::size_t>(n));
    std::int64_t links = 0;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (m >> e & 1) {
        adj[pairs[e].first].push_back(pairs[e].second);
        adj[pairs[e].second].push_back(pairs[e].first);
        ++links;
      }
    }
    std::int64_t sum = 0;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int d : bfs(adj, u)) {
        if (d < 0) ok = false;
        sum += d;
      }
    }
    if (!ok) continue;
    Rational c = alpha * Rational(links) + Rational(sum);
    if (!best || c < *best) best = c;
  }
  return *best;
}

}  // namespace ncg::oracle
