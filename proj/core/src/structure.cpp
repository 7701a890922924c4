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

#include "ncg/structure.hpp"

#include <algorithm>
#include <tuple>
#include <numeric>

#include "ncg/error.hpp"

namespace ncg {
namespace {

// BFS over an adjacency list, optionally ignoring the single edge (a, b).
std::vector<Distance> bfs_skip_edge(
    const std::vector<std::vector<Player>>& adjacency, Player source,
    Player skip_a, Player skip_b) {
  std::vector<Distance> dist(adjacency.size(), kUnreachable);
  std::vector<Player> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Player x = queue[head];
    for (Player y : adjacency[x]) {
      if ((x == skip_a && y == skip_b) || (x == skip_b && y == skip_a)) {
        continue;
      }
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

Distance girth_of(const std::vector<std::vector<Player>>& adjacency,
                  const std::vector<std::pair<Player, Player>>& edges) {
  Distance best = kUnreachable;
  for (auto [a, b] : edges) {
    auto dist = bfs_skip_edge(adjacency, a, a, b);
    if (dist[b] != kUnreachable) best = std::min(best, dist[b] + 1);
  }
  return best;
}

int hanging_size(const OwnedGraph& g, const std::vector<char>& member,
                 Player v) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Player> queue{v};
  seen[v] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Player y : g.neighbors(queue[head])) {
      if (!seen[y] && !member[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return static_cast<int>(queue.size());
}

}  // namespace

bool Component::has_edge(Player a, Player b) const {
  if (!contains(a)) return false;
  const auto& adj = adjacency[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

Component make_component(const OwnedGraph& g, std::vector<Player> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  const int n = g.n();
  Component h;
  h.vertices = vertices;
  h.member.assign(static_cast<std::size_t>(n), 0);
  for (Player v : vertices) {
    if (v < 0 || v >= n) throw ValidationError("component vertex out of range");
    h.member[v] = 1;
  }
  h.adjacency.assign(static_cast<std::size_t>(n), {});
  h.hanging_weight.assign(static_cast<std::size_t>(n), 0);
  for (Player v : vertices) {
    for (Player y : g.neighbors(v)) {
      if (h.member[y]) {
        h.adjacency[v].push_back(y);
        if (v < y) h.edges.emplace_back(v, y);
      }
    }
    h.hanging_weight[v] = hanging_size(g, h.member, v);
  }
  std::sort(h.edges.begin(), h.edges.end());
  h.diameter = 0;
  for (Player v : vertices) {
    auto dist = bfs_distances(h.adjacency, v);
    for (Player y : vertices) h.diameter = std::max(h.diameter, dist[y]);
  }
  return h;
}

std::vector<Component> biconnected_components(const OwnedGraph& g) {
  const int n = g.n();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Player>> blocks;
  int timer = 0;

  struct Frame {
    Player v;
    Player parent;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::vector<std::pair<Player, Player>> edge_stack;

  for (Player root = 0; root < n; ++root) {
    if (disc[root] != -1 || g.neighbors(root).empty()) continue;
    disc[root] = low[root] = timer++;
    frames.push_back({root, -1, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const Player v = f.v;
      const auto& adj = g.neighbors(v);
      if (f.next < adj.size()) {
        Player w = adj[f.next++];
        if (disc[w] == -1) {
          edge_stack.emplace_back(v, w);
          disc[w] = low[w] = timer++;
          frames.push_back({w, v, 0});
        } else if (w != f.parent && disc[w] < disc[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      frames.pop_back();
      if (frames.empty()) break;
      Player p = frames.back().v;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        std::vector<Player> block;
        while (true) {
          auto e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e.first == p && e.second == v) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());
  std::vector<Component> out;
  out.reserve(blocks.size());
  for (auto& b : blocks) out.push_back(make_component(g, std::move(b)));
  return out;
}

std::vector<Component> nontrivial_components(const OwnedGraph& g) {
  std::vector<Component> out;
  for (auto& c : biconnected_components(g)) {
    if (c.nontrivial()) out.push_back(std::move(c));
  }
  return out;
}

std::vector<TwoPath> two_paths(const OwnedGraph& g, const Component& h) {
  std::vector<TwoPath> out;
  if (h.vertices.empty()) return out;

  auto is_hub = [&](Player v) { return h.degree(v) != 2; };
  auto orient = [&](TwoPath& p) {
    const auto& nodes = p.nodes;
    if (nodes.size() < 3) {
      p.oriented = true;
      return;
    }
    bool forward = true;
    bool backward = true;
    for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
      Player x = nodes[i];
      bool next = g.owns(x, nodes[i + 1]) && !g.owns(x, nodes[i - 1]);
      bool prev = g.owns(x, nodes[i - 1]) && !g.owns(x, nodes[i + 1]);
      forward = forward && next;
      backward = backward && prev;
    }
    p.oriented = forward || backward;
  };

  bool any_hub = std::any_of(h.vertices.begin(), h.vertices.end(), is_hub);
  if (!any_hub) {
    // H is a single cycle.
    TwoPath p;
    p.closed = true;
    Player start = h.vertices.front();
    Player prev = start;
    Player cur = std::min(h.adjacency[start][0], h.adjacency[start][1]);
    p.nodes.push_back(start);
    while (cur != start) {
      p.nodes.push_back(cur);
      const auto& adj = h.adjacency[cur];
      Player next = adj[0] == prev ? adj[1] : adj[0];
      prev = cur;
      cur = next;
    }
    p.nodes.push_back(start);
    orient(p);
    out.push_back(std::move(p));
    return out;
  }

  for (Player a : h.vertices) {
    if (!is_hub(a)) continue;
    for (Player b : h.adjacency[a]) {
      std::vector<Player> nodes{a};
      Player prev = a;
      Player cur = b;
      while (!is_hub(cur)) {
        nodes.push_back(cur);
        const auto& adj = h.adjacency[cur];
        Player next = adj[0] == prev ? adj[1] : adj[0];
        prev = cur;
        cur = next;
      }
      nodes.push_back(cur);
      std::vector<Player> reversed(nodes.rbegin(), nodes.rend());
      if (nodes <= reversed) {
        TwoPath p;
        p.nodes = std::move(nodes);
        orient(p);
        out.push_back(std::move(p));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const TwoPath& x, const TwoPath& y) { return x.nodes < y.nodes; });
  return out;
}

std::int64_t H3Multigraph::total_weight() const {
  std::int64_t sum = 0;
  for (const auto& e : edges) sum += e.weight;
  return sum;
}

H3Multigraph build_h3(const OwnedGraph& g, const Component& h) {
  H3Multigraph h3;
  for (Player v : h.vertices) {
    if (h.degree(v) >= 3) h3.vertices.push_back(v);
  }
  if (h3.vertices.empty()) return h3;
  for (const auto& p : two_paths(g, h)) {
    if (p.closed) continue;
    Player a = p.nodes.front();
    Player b = p.nodes.back();
    if (a > b) std::swap(a, b);
    h3.edges.push_back({a, b, p.interior()});
  }
  std::sort(h3.edges.begin(), h3.edges.end(),
            [](const H3Edge& x, const H3Edge& y) {
              return std::tie(x.a, x.b, x.weight) < std::tie(y.a, y.b, y.weight);
            });
  return h3;
}

DegreeStats avg_degrees(const OwnedGraph& g, const Component& h) {
  const auto n = static_cast<std::size_t>(g.n());
  DegreeStats st;
  st.out.assign(n, 0);
  st.in.assign(n, 0);
  st.deg.assign(n, 0);
  std::int64_t owned_total = 0;
  for (Player v : h.vertices) {
    st.deg[v] = h.degree(v);
    for (Player y : h.adjacency[v]) {
      if (g.owns(v, y)) ++st.out[v];
      if (g.owns(y, v)) ++st.in[v];
    }
    owned_total += st.out[v];
    st.max_out = std::max(st.max_out, st.out[v]);
    if (st.out[v] >= 2) st.v_ge2.push_back(v);
  }
  const auto nv = static_cast<std::int64_t>(h.vertices.size());
  if (nv == 0) return st;
  st.avg_deg = Rational(2 * static_cast<std::int64_t>(h.edges.size()), nv);
  st.avg_out = Rational(owned_total, nv);

  H3Multigraph h3 = build_h3(g, h);
  if (!h3.empty()) {
    std::int64_t excess = 0;
    for (Player u : h3.vertices) excess += h.degree(u) - 2;
    std::int64_t denom =
        static_cast<std::int64_t>(h3.vertices.size()) + h3.total_weight();
    st.h3_form = Rational(2) + Rational(excess, denom);
  }
  return st;
}

Rational deg_lower_bound_value(const Rational& x) {
  if (x < Rational(1)) {
    throw ValidationError("f(x) needs x >= 1, got " + x.to_short_string());
  }
  return Rational(2) + Rational(2) * (x - Rational(1)) /
                           (Rational(1) + Rational(73) * x);
}

std::vector<std::vector<Player>> distance_layers(const OwnedGraph& g,
                                                 const Component& h,
                                                 Player u) {
  (void)g;
  if (!h.contains(u)) throw ValidationError("root not in component");
  auto dist = bfs_distances(h.adjacency, u);
  std::vector<std::vector<Player>> layers;
  for (Player v : h.vertices) {
    if (dist[v] == kUnreachable) continue;
    if (static_cast<std::size_t>(dist[v]) >= layers.size()) {
      layers.resize(static_cast<std::size_t>(dist[v]) + 1);
    }
    layers[dist[v]].push_back(v);
  }
  return layers;
}

std::vector<Player> beyond(const OwnedGraph& g, const Component& h, Player u,
                           Distance r) {
  std::vector<Player> out;
  auto layers = distance_layers(g, h, u);
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (static_cast<Distance>(i) > r) {
      out.insert(out.end(), layers[i].begin(), layers[i].end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Distance eccentricity(const OwnedGraph& g, Player u) {
  Distance e = 0;
  for (Distance d : g.dist_row(u)) e = std::max(e, d);
  return e;
}

Distance diameter(const OwnedGraph& g) {
  Distance d = 0;
  for (Player u = 0; u < g.n(); ++u) d = std::max(d, eccentricity(g, u));
  return d;
}

Distance induced_distance(const OwnedGraph& g, const std::vector<char>& z,
                          Player a, Player b) {
  if (!z[a] || !z[b]) return kUnreachable;
  std::vector<Distance> dist(static_cast<std::size_t>(g.n()), kUnreachable);
  std::vector<Player> queue{a};
  dist[a] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Player x = queue[head];
    if (x == b) return dist[x];
    for (Player y : g.neighbors(x)) {
      if (z[y] && dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist[b];
}

bool induced_connected(const OwnedGraph& g, const std::vector<char>& z) {
  Player start = -1;
  int count = 0;
  for (Player v = 0; v < g.n(); ++v) {
    if (z[v]) {
      if (start < 0) start = v;
      ++count;
    }
  }
  if (count <= 1) return true;
  std::vector<char> seen(z.size(), 0);
  std::vector<Player> queue{start};
  seen[start] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Player y : g.neighbors(queue[head])) {
      if (z[y] && !seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return static_cast<int>(queue.size()) == count;
}

Distance girth(const OwnedGraph& g, const Component& h) {
  (void)g;
  return girth_of(h.adjacency, h.edges);
}

Distance girth(const OwnedGraph& g) {
  std::vector<std::vector<Player>> adjacency(static_cast<std::size_t>(g.n()));
  for (Player v = 0; v < g.n(); ++v) adjacency[v] = g.neighbors(v);
  return girth_of(adjacency, g.edges());
}

Player min_usage_node(const OwnedGraph& g, const Component& h) {
  if (h.vertices.empty()) throw ValidationError("empty component");
  Player best = h.vertices.front();
  ExtRational best_cost = usage_cost(g, best);
  for (Player v : h.vertices) {
    ExtRational c = usage_cost(g, v);
    if (c < best_cost) {
      best = v;
      best_cost = c;
    }
  }
  return best;
}

}  // namespace ncg
