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

#include "ncg/asets.hpp"

#include <algorithm>
#include <sstream>

#include "ncg/error.hpp"

namespace ncg {
namespace {

std::string join(const std::vector<Player>& xs) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ",";
    out << xs[i];
  }
  out << "}";
  return out.str();
}

bool subset_of(const std::vector<Player>& a, const std::vector<char>& b) {
  return std::all_of(a.begin(), a.end(), [&](Player x) { return b[x] != 0; });
}

bool intersects(const std::vector<Player>& a, const std::vector<char>& b) {
  return std::any_of(a.begin(), a.end(), [&](Player x) { return b[x] != 0; });
}

std::vector<Player> owned_in_h(const OwnedGraph& g, const Component& h,
                               Player v) {
  std::vector<Player> out;
  for (Player t : g.owned(v)) {
    if (h.has_edge(v, t)) out.push_back(t);
  }
  return out;
}

// Largest clique size in a graph on k <= 20 vertices given as bit rows.
int max_clique_bits(const std::vector<std::uint32_t>& rows) {
  const int k = static_cast<int>(rows.size());
  if (k == 0) return 0;
  const std::uint32_t total = 1u << k;
  std::vector<char> is_clique(total, 0);
  is_clique[0] = 1;
  int best = 0;
  for (std::uint32_t s = 1; s < total; ++s) {
    int low = __builtin_ctz(s);
    std::uint32_t rest = s & (s - 1);
    if (is_clique[rest] && (rows[low] & rest) == rest) {
      is_clique[s] = 1;
      best = std::max(best, __builtin_popcount(s));
    }
  }
  return best;
}

}  // namespace

std::string_view covering_policy_name(CoveringPolicy p) {
  switch (p) {
    case CoveringPolicy::kLex2:
      return "lex2";
    case CoveringPolicy::kAll:
      return "all";
    case CoveringPolicy::kExplicit:
      return "explicit";
  }
  return "?";
}

std::vector<char> to_mask(int n, const std::vector<Player>& nodes) {
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  for (Player x : nodes) mask.at(x) = 1;
  return mask;
}

TwoEdgeCovering make_covering(
    const OwnedGraph& g, const Component& h, Player root,
    CoveringPolicy policy,
    const std::map<Player, std::vector<Player>>& explicit_map) {
  if (!h.contains(root)) throw ValidationError("root not in component");
  TwoEdgeCovering cov;
  cov.policy = policy;
  cov.root = root;

  std::map<Player, std::vector<Player>> domain;
  for (Player v : h.vertices) {
    if (v == root) continue;
    auto owned = owned_in_h(g, h, v);
    if (owned.size() >= 2) domain[v] = std::move(owned);
  }

  if (policy == CoveringPolicy::kExplicit) {
    for (const auto& [v, targets] : explicit_map) {
      auto it = domain.find(v);
      if (it == domain.end()) {
        throw ValidationError("covering names node " + std::to_string(v) +
                              " which does not own two links of H");
      }
      std::vector<Player> sorted = targets;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      if (sorted.size() < 2) {
        throw ValidationError("J(" + std::to_string(v) +
                              ") needs at least two links");
      }
      for (Player t : sorted) {
        if (!std::binary_search(it->second.begin(), it->second.end(), t)) {
          throw ValidationError("J(" + std::to_string(v) + ") uses link to " +
                                std::to_string(t) +
                                " which it does not own inside H");
        }
      }
      cov.j[v] = std::move(sorted);
    }
    for (const auto& [v, owned] : domain) {
      if (!cov.covers(v)) {
        throw ValidationError("covering misses node " + std::to_string(v));
      }
    }
    return cov;
  }

  for (auto& [v, owned] : domain) {
    if (policy == CoveringPolicy::kLex2) owned.resize(2);
    cov.j[v] = owned;
  }
  return cov;
}

ASet a_set(const OwnedGraph& g, Player root, Player v,
           const std::vector<Player>& targets) {
  const int n = g.n();
  if (root < 0 || root >= n || v < 0 || v >= n) {
    throw ValidationError("a_set: node out of range");
  }
  for (Player t : targets) {
    if (t < 0 || t >= n || !g.adjacent(v, t)) {
      throw ValidationError("a_set: " + std::to_string(v) + " has no link to " +
                            std::to_string(t));
    }
  }
  ASet a;
  a.root = root;
  a.owner = v;
  a.targets = targets;
  a.mask.assign(static_cast<std::size_t>(n), 0);
  a.parts.assign(targets.size(), {});

  auto d = g.dist_row(root);
  std::vector<char> descending(static_cast<std::size_t>(n), 0);
  if (d[v] != kUnreachable) {
    for (Player t : targets) {
      if (d[t] == d[v] + 1) descending[t] = 1;
    }
  }

  std::vector<Player> order;
  for (Player x = 0; x < n; ++x) {
    if (d[x] != kUnreachable) order.push_back(x);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Player x, Player y) { return d[x] < d[y]; });

  // free[x]: some shortest root-x path avoids the descending J(v) links.
  std::vector<char> free(static_cast<std::size_t>(n), 0);
  free[root] = 1;
  for (Player x : order) {
    if (x == root) continue;
    for (Player p : g.neighbors(x)) {
      if (d[p] + 1 != d[x] || !free[p]) continue;
      if (p == v && descending[x]) continue;
      free[x] = 1;
      break;
    }
  }
  for (Player x : order) {
    if (!free[x]) a.mask[x] = 1;
  }
  a.mask[v] = 1;
  for (Player x = 0; x < n; ++x) {
    if (a.mask[x]) a.members.push_back(x);
  }

  for (std::size_t i = 0; i < targets.size(); ++i) {
    Player t = targets[i];
    if (!descending[t]) continue;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Player> queue{t};
    seen[t] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Player x = queue[head];
      for (Player y : g.neighbors(x)) {
        if (!seen[y] && d[y] == d[x] + 1) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    for (Player x = 0; x < n; ++x) {
      if (seen[x] && a.mask[x]) a.parts[i].push_back(x);
    }
  }
  return a;
}

ASet a_set(const OwnedGraph& g, const TwoEdgeCovering& cov, Player v) {
  auto it = cov.j.find(v);
  if (it == cov.j.end()) {
    throw ValidationError("node " + std::to_string(v) +
                          " is outside the covering domain");
  }
  return a_set(g, cov.root, v, it->second);
}

std::vector<Player> DominanceForest::tree_roots() const {
  std::vector<Player> out;
  for (Player v : nodes) {
    if (!parent.count(v)) out.push_back(v);
  }
  return out;
}

std::vector<Player> DominanceForest::tree(Player r) const {
  std::vector<Player> out;
  std::vector<Player> stack{r};
  while (!stack.empty()) {
    Player x = stack.back();
    stack.pop_back();
    out.push_back(x);
    auto it = children.find(x);
    if (it == children.end()) continue;
    for (auto c = it->second.rbegin(); c != it->second.rend(); ++c) {
      stack.push_back(*c);
    }
  }
  return out;
}

std::vector<std::pair<Player, Player>> DominanceForest::edges() const {
  std::vector<std::pair<Player, Player>> out;
  for (const auto& [child, par] : parent) out.emplace_back(par, child);
  std::sort(out.begin(), out.end());
  return out;
}

DominanceForest dominance_forest(const OwnedGraph& g, const Component& h,
                                 const TwoEdgeCovering& cov) {
  DominanceForest f;
  f.root = cov.root;
  for (const auto& [v, targets] : cov.j) {
    f.nodes.push_back(v);
    f.sets.emplace(v, a_set(g, cov.root, v, targets));
  }

  for (std::size_t i = 0; i < f.nodes.size(); ++i) {
    const ASet& a = f.sets.at(f.nodes[i]);
    for (std::size_t j = i + 1; j < f.nodes.size(); ++j) {
      const ASet& b = f.sets.at(f.nodes[j]);
      if (!intersects(a.members, b.mask)) continue;
      if (subset_of(a.members, b.mask) || subset_of(b.members, a.mask)) {
        continue;
      }
      throw InvariantViolation(
          "A sets neither disjoint nor nested: A(" +
          std::to_string(a.owner) + ")=" + join(a.members) + " A(" +
          std::to_string(b.owner) + ")=" + join(b.members));
    }
  }

  for (Player w : f.nodes) {
    const ASet& aw = f.sets.at(w);
    Player best = -1;
    std::size_t best_size = 0;
    for (Player v : f.nodes) {
      if (v == w) continue;
      const ASet& av = f.sets.at(v);
      if (av.size() <= aw.size() || !subset_of(aw.members, av.mask)) continue;
      if (best < 0 || av.size() < best_size) {
        best = v;
        best_size = av.size();
      }
    }
    if (best >= 0) {
      f.parent[w] = best;
      f.children[best].push_back(w);
    }
  }
  for (auto& [v, kids] : f.children) std::sort(kids.begin(), kids.end());

  for (Player v : f.nodes) {
    std::vector<char> covered(static_cast<std::size_t>(g.n()), 0);
    auto it = f.children.find(v);
    if (it != f.children.end()) {
      for (Player c : it->second) {
        for (Player x : f.sets.at(c).members) covered[x] = 1;
      }
    }
    std::vector<Player> aa;
    int weight = 0;
    for (Player x : f.sets.at(v).members) {
      if (covered[x]) continue;
      aa.push_back(x);
      if (h.contains(x)) ++weight;
    }
    f.aa[v] = std::move(aa);
    f.aa_weight[v] = weight;
  }
  return f;
}

std::vector<std::pair<Player, Player>> bridges(const OwnedGraph& g,
                                               const std::vector<char>& x,
                                               const std::vector<char>& y,
                                               Player z) {
  std::vector<std::pair<Player, Player>> out;
  for (Player a = 0; a < g.n(); ++a) {
    if (!x[a] || a == z) continue;
    for (Player b : g.neighbors(a)) {
      if (y[b]) out.emplace_back(a, b);
    }
  }
  return out;
}

BridgeCliqueGraph bridge_clique_graph(const OwnedGraph& g, const ASet& a,
                                      int max_k) {
  BridgeCliqueGraph z;
  z.k = static_cast<int>(a.parts.size());
  if (z.k > max_k) {
    throw GuardError("bridge-clique search needs k <= " +
                     std::to_string(max_k) + ", got " + std::to_string(z.k));
  }
  z.adj.assign(static_cast<std::size_t>(z.k),
               std::vector<char>(static_cast<std::size_t>(z.k), 0));
  std::vector<std::vector<char>> masks;
  for (const auto& part : a.parts) masks.push_back(to_mask(g.n(), part));
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(z.k), 0);
  std::vector<std::uint32_t> co_rows(static_cast<std::size_t>(z.k), 0);
  for (int i = 0; i < z.k; ++i) {
    for (int j = 0; j < z.k; ++j) {
      if (i == j) continue;
      if (j > i) {
        bool linked = !bridges(g, masks[i], masks[j]).empty();
        z.adj[i][j] = z.adj[j][i] = linked ? 1 : 0;
      }
    }
  }
  for (int i = 0; i < z.k; ++i) {
    for (int j = 0; j < z.k; ++j) {
      if (i == j) continue;
      if (z.adj[i][j]) {
        rows[i] |= 1u << j;
      } else {
        co_rows[i] |= 1u << j;
      }
    }
  }
  z.max_clique = max_clique_bits(rows);
  z.max_independent = max_clique_bits(co_rows);
  return z;
}

CheckResult check_nesting(const OwnedGraph& g, const DominanceForest& f) {
  (void)g;
  CheckResult r;
  r.id = "nesting";
  r.claim = "any two A sets are disjoint or nested";
  r.verdict = Verdict::kHolds;
  std::int64_t sites = 0;
  for (std::size_t i = 0; i < f.nodes.size(); ++i) {
    const ASet& a = f.sets.at(f.nodes[i]);
    for (std::size_t j = i + 1; j < f.nodes.size(); ++j) {
      const ASet& b = f.sets.at(f.nodes[j]);
      ++sites;
      if (!intersects(a.members, b.mask)) continue;
      if (subset_of(a.members, b.mask) || subset_of(b.members, a.mask)) {
        continue;
      }
      if (r.verdict == Verdict::kHolds) {
        r.verdict = Verdict::kViolated;
        r.witness = "root=" + std::to_string(f.root) + " A(" +
                    std::to_string(a.owner) + ")=" + join(a.members) + " A(" +
                    std::to_string(b.owner) + ")=" + join(b.members);
      }
    }
  }
  r.details["sites"] = sites;
  return r;
}

CheckResult check_inclusion(const OwnedGraph& g, const DominanceForest& f) {
  CheckResult r;
  r.id = "inclusion";
  r.claim = "v' in A_i(v) implies A(v') within A_i(v)";
  r.verdict = Verdict::kHolds;
  std::int64_t sites = 0;
  for (Player v : f.nodes) {
    const ASet& a = f.sets.at(v);
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
      auto part_mask = to_mask(g.n(), a.parts[i]);
      for (Player vp : a.parts[i]) {
        if (vp == v || !f.sets.count(vp)) continue;
        ++sites;
        const ASet& b = f.sets.at(vp);
        if (subset_of(b.members, part_mask)) continue;
        if (r.verdict == Verdict::kHolds) {
          r.verdict = Verdict::kViolated;
          r.witness = "root=" + std::to_string(f.root) + " v=" +
                      std::to_string(v) + " i=" + std::to_string(i) +
                      " A_i=" + join(a.parts[i]) + " v'=" +
                      std::to_string(vp) + " A(v')=" + join(b.members);
        }
      }
    }
  }
  r.details["sites"] = sites;
  if (sites == 0) r.verdict = Verdict::kPreconditionNotMet;
  return r;
}

std::vector<char> component_containing(const OwnedGraph& g, const ASet& a,
                                       Player w2) {
  std::vector<char> z(static_cast<std::size_t>(g.n()), 0);
  if (!a.contains(w2) || w2 == a.owner) return z;
  std::vector<Player> queue{w2};
  z[w2] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Player y : g.neighbors(queue[head])) {
      if (!z[y] && a.contains(y) && y != a.owner) {
        z[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return z;
}

CheckResult check_connectivity(const OwnedGraph& g, const DominanceForest& f) {
  CheckResult r;
  r.id = "connectivity";
  r.claim = "(Z + w1) minus A(w2) is connected on forest 2-paths w0-w1-w2";
  r.verdict = Verdict::kHolds;
  std::int64_t sites = 0;
  for (Player w1 : f.nodes) {
    auto par = f.parent.find(w1);
    auto kids = f.children.find(w1);
    if (par == f.parent.end() || kids == f.children.end() ||
        kids->second.size() != 1) {
      continue;
    }
    Player w2 = kids->second.front();
    ++sites;
    const ASet& a1 = f.sets.at(w1);
    const ASet& a2 = f.sets.at(w2);
    auto z = component_containing(g, a1, w2);
    z[w1] = 1;
    for (Player x : a2.members) z[x] = 0;
    if (induced_connected(g, z)) continue;
    if (r.verdict == Verdict::kHolds) {
      r.verdict = Verdict::kViolated;
      std::vector<Player> zs;
      for (Player x = 0; x < g.n(); ++x) {
        if (z[x]) zs.push_back(x);
      }
      r.witness = "root=" + std::to_string(f.root) + " w0=" +
                  std::to_string(par->second) + " w1=" + std::to_string(w1) +
                  " w2=" + std::to_string(w2) + " set=" + join(zs);
    }
  }
  r.details["sites"] = sites;
  if (sites == 0) r.verdict = Verdict::kPreconditionNotMet;
  return r;
}

TreeAnatomy tree_anatomy(const OwnedGraph& g, const DominanceForest& f,
                         Player tree_root, Distance big_l, int l) {
  if (l < 1) throw ValidationError("block length must be >= 1");
  TreeAnatomy t;
  t.root = tree_root;
  t.nodes = f.tree(tree_root);
  auto child_count = [&](Player v) {
    auto it = f.children.find(v);
    return it == f.children.end() ? std::size_t{0} : it->second.size();
  };
  auto is_two_node = [&](Player v) {
    return v != tree_root && child_count(v) == 1;
  };
  for (Player v : t.nodes) {
    std::size_t kids = child_count(v);
    if (kids == 0) {
      t.leaves.push_back(v);
    } else if (v == tree_root || kids >= 2) {
      t.interior.push_back(v);
    }
  }
  std::sort(t.leaves.begin(), t.leaves.end());
  std::sort(t.interior.begin(), t.interior.end());

  for (Player x : t.nodes) {
    if (x == tree_root || is_two_node(x)) continue;
    std::vector<Player> path{x};
    Player p = f.parent.at(x);
    while (is_two_node(p)) {
      path.push_back(p);
      p = f.parent.at(p);
    }
    path.push_back(p);
    std::reverse(path.begin(), path.end());
    t.two_paths.push_back(std::move(path));
  }
  std::sort(t.two_paths.begin(), t.two_paths.end());

  auto d = g.dist_row(f.root);
  for (Player v : t.nodes) {
    if (d[v] <= big_l) t.near.push_back(v);
  }
  std::sort(t.near.begin(), t.near.end());

  for (const auto& path : t.two_paths) {
    std::vector<Player> run;
    auto flush = [&]() {
      std::size_t i = 0;
      for (; i + static_cast<std::size_t>(l) <= run.size(); i += l) {
        t.full_blocks.emplace_back(run.begin() + static_cast<long>(i),
                                   run.begin() + static_cast<long>(i + l));
      }
      if (i < run.size()) {
        t.short_blocks.emplace_back(run.begin() + static_cast<long>(i),
                                    run.end());
      }
      run.clear();
    };
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (d[path[i]] > big_l) {
        run.push_back(path[i]);
      } else {
        flush();
      }
    }
    flush();
  }
  return t;
}

Rational average_aa_weight(const DominanceForest& f, Player tree_root) {
  auto nodes = f.tree(tree_root);
  std::int64_t sum = 0;
  for (Player v : nodes) sum += f.aa_weight.at(v);
  return Rational(sum, static_cast<std::int64_t>(nodes.size()));
}

}  // namespace ncg
