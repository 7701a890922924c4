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

#include "ncg/verifiers.hpp"

#include <algorithm>
#include <sstream>

#include "ncg/equilibrium.hpp"
#include "ncg/error.hpp"
#include "ncg/search.hpp"

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

std::vector<Player> members_of(const std::vector<char>& mask) {
  std::vector<Player> out;
  for (Player x = 0; x < static_cast<Player>(mask.size()); ++x) {
    if (mask[x]) out.push_back(x);
  }
  return out;
}

nlohmann::json distance_json(Distance d) {
  if (d == kUnreachable) return "inf";
  return d;
}

CheckResult start(const VerifyContext& ctx, const std::string& id) {
  const CheckerInfo& info = find_checker(id);
  CheckResult r;
  r.id = info.id;
  r.claim = info.claim;
  r.nonstandard = (ctx.gate.nonstandard && !ctx.gate.ne_verified) ||
                  !ctx.vc.standard();
  r.details["ne_verified"] = ctx.gate.ne_verified;
  return r;
}

CheckResult not_met(CheckResult r, const std::string& reason) {
  r.verdict = Verdict::kPreconditionNotMet;
  r.details["reason"] = reason;
  return r;
}

// Shared gating: equilibrium, optional alpha > n, at least one H.
std::optional<std::string> gate_reason(const VerifyContext& ctx,
                                       bool needs_alpha_gt_n, bool needs_h) {
  if (!ctx.gate.admits()) return "equilibrium not verified";
  if (needs_alpha_gt_n && !(ctx.cfg.alpha > Rational(ctx.cfg.n))) {
    return "needs alpha > n";
  }
  if (needs_h && ctx.components.empty()) {
    return "no non-trivial biconnected component";
  }
  return std::nullopt;
}

// Folds per-component sub-results: any Violated wins (first witness kept),
// else Holds if some site was checked, else PreconditionNotMet.
struct Fold {
  bool any_checked = false;
  bool violated = false;
  std::string witness;

  void hold() { any_checked = true; }
  void fail(const std::string& w) {
    any_checked = true;
    if (!violated) witness = w;
    violated = true;
  }
  CheckResult finish(CheckResult r, const std::string& unmet) const {
    if (violated) {
      r.verdict = Verdict::kViolated;
      r.witness = witness;
    } else if (any_checked) {
      r.verdict = Verdict::kHolds;
    } else {
      r = not_met(std::move(r), unmet);
    }
    return r;
  }
};

struct ForestSite {
  const Component* h = nullptr;
  Player root = 0;
  TwoEdgeCovering cov;
  DominanceForest forest;
};

// Forest for component h; nullopt with a witness when nesting fails.
std::optional<ForestSite> forest_for(const VerifyContext& ctx,
                                     const Component& h, std::string* error) {
  ForestSite site;
  site.h = &h;
  site.root = ctx.root_for(h);
  site.cov = make_covering(ctx.g, h, site.root, ctx.vc.covering);
  try {
    site.forest = dominance_forest(ctx.g, h, site.cov);
  } catch (const InvariantViolation& e) {
    *error = e.what();
    return std::nullopt;
  }
  return site;
}

bool tree_two_node(const DominanceForest& f, Player v) {
  auto kids = f.children.find(v);
  return f.parent.count(v) && kids != f.children.end() &&
         kids->second.size() == 1;
}

Player only_child(const DominanceForest& f, Player v) {
  return f.children.at(v).front();
}

// (Z + w1) minus A(w2), with Z the component of A(w1) - w1 holding w2.
std::vector<char> exchange_set(const OwnedGraph& g, const DominanceForest& f,
                               Player w1, Player w2, std::vector<char>* zw1) {
  auto z = component_containing(g, f.sets.at(w1), w2);
  z[w1] = 1;
  *zw1 = z;
  for (Player x : f.sets.at(w2).members) z[x] = 0;
  return z;
}

bool has_exit_bridge(const OwnedGraph& g, const DominanceForest& f, Player w1,
                     Player w2, std::pair<Player, Player>* edge) {
  std::vector<char> zw1;
  auto x = exchange_set(g, f, w1, w2, &zw1);
  std::vector<char> y(zw1.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = zw1[i] ? 0 : 1;
  auto b = bridges(g, x, y, w1);
  if (b.empty()) return false;
  if (edge) *edge = b.front();
  return true;
}

// Runs `body` on each forest site; collects nesting failures as violations.
template <class F>
void for_each_forest(const VerifyContext& ctx, Fold& fold, nlohmann::json& out,
                     F&& body) {
  out = nlohmann::json::array();
  for (const auto& h : ctx.components) {
    std::string error;
    auto site = forest_for(ctx, h, &error);
    if (!site) {
      fold.fail("nesting failed: " + error);
      continue;
    }
    nlohmann::json entry;
    entry["component"] = h.vertices.front();
    entry["root"] = site->root;
    entry["d_H"] = h.diameter;
    entry["forest_nodes"] = site->forest.nodes.size();
    body(*site, entry);
    out.push_back(entry);
  }
}

}  // namespace

bool VerifierConfig::standard() const {
  const VerifierConfig d;
  return two_path_cap == d.two_path_cap && h3_weight_cap == d.h3_weight_cap &&
         diam_threshold == d.diam_threshold && deg_floor == d.deg_floor &&
         sac_max_x == d.sac_max_x && leaf_a == d.leaf_a &&
         leaf_b == d.leaf_b && leaf_c == d.leaf_c && far_a == d.far_a &&
         two_path_log_factor == d.two_path_log_factor &&
         two_path_diam_a == d.two_path_diam_a &&
         two_path_diam_b == d.two_path_diam_b && diam_gap == d.diam_gap &&
         hop_cap == d.hop_cap && tree_weight_frac == d.tree_weight_frac &&
         degree_cap == d.degree_cap && degree_cap_diam == d.degree_cap_diam &&
         !root_override.has_value();
}

VerifyContext VerifyContext::make(const GameConfig& cfg,
                                  const StrategyVector& s,
                                  const VerifierConfig& vc, bool nonstandard) {
  cfg.validate();
  s.validate(cfg.n);
  VerifyContext ctx;
  ctx.cfg = cfg;
  ctx.s = s;
  ctx.vc = vc;
  ctx.g = build_graph(cfg, s);
  ctx.components = nontrivial_components(ctx.g);
  ctx.gate.nonstandard = nonstandard;
  ctx.gate.ne_verified = cfg.n <= vc.verify_max_n && is_nash_fast(cfg, s);
  if (vc.root_override &&
      (*vc.root_override < 0 || *vc.root_override >= cfg.n)) {
    throw ValidationError("root override out of range");
  }
  return ctx;
}

Player VerifyContext::root_for(const Component& h) const {
  if (vc.root_override && h.contains(*vc.root_override)) {
    return *vc.root_override;
  }
  return min_usage_node(g, h);
}

Rational rho(const GameConfig& cfg) {
  Rational n(cfg.n);
  if (!(cfg.alpha > n)) throw ValidationError("rho needs alpha > n");
  return cfg.alpha / (cfg.alpha - n);
}

Rational leaf_threshold(const GameConfig& cfg, const VerifierConfig& vc) {
  return Rational(vc.leaf_a) * vc.k * rho(cfg) + Rational(vc.leaf_b) * vc.k +
         Rational(vc.leaf_c);
}

Rational far_threshold(const GameConfig& cfg, const VerifierConfig& vc) {
  return Rational(1) + Rational(vc.far_a) * vc.k * rho(cfg);
}

int two_path_min_l(const GameConfig& cfg, const VerifierConfig& vc) {
  Rational target = Rational(vc.two_path_log_factor) * rho(cfg);
  for (int l = 1; l < 62; ++l) {
    if (Rational(std::int64_t{1} << (l - 1)) >= target) return l;
  }
  throw GuardError("2-path block length exceeds 61");
}

CheckResult check_two_path_bound(VerifyContext& ctx) {
  CheckResult r = start(ctx, "two_path_bound");
  if (auto why = gate_reason(ctx, false, true)) return not_met(r, *why);
  Fold fold;
  int longest = 0;
  for (const auto& h : ctx.components) {
    for (const auto& p : two_paths(ctx.g, h)) {
      longest = std::max(longest, p.interior());
      if (p.interior() < ctx.vc.two_path_cap) {
        fold.hold();
      } else {
        fold.fail("2-path " + join(p.nodes) + " has " +
                  std::to_string(p.interior()) + " interior nodes >= " +
                  std::to_string(ctx.vc.two_path_cap));
      }
    }
  }
  r.details["longest_interior"] = longest;
  r.details["cap"] = ctx.vc.two_path_cap;
  return fold.finish(r, "no 2-path in H");
}

CheckResult check_h3_weight_cap(VerifyContext& ctx) {
  CheckResult r = start(ctx, "h3_weight_cap");
  if (auto why = gate_reason(ctx, false, true)) return not_met(r, *why);
  Fold fold;
  int heaviest = 0;
  for (const auto& h : ctx.components) {
    H3Multigraph h3 = build_h3(ctx.g, h);
    for (const auto& e : h3.edges) {
      heaviest = std::max(heaviest, e.weight);
      if (e.weight < ctx.vc.h3_weight_cap) {
        fold.hold();
      } else {
        fold.fail("H3 edge " + std::to_string(e.a) + "-" +
                  std::to_string(e.b) + " weight " + std::to_string(e.weight) +
                  " >= " + std::to_string(ctx.vc.h3_weight_cap));
      }
    }
  }
  r.details["max_weight"] = heaviest;
  r.details["cap"] = ctx.vc.h3_weight_cap;
  return fold.finish(r, "H3 is empty");
}

CheckResult check_deg_lower_bound(VerifyContext& ctx) {
  CheckResult r = start(ctx, "deg_lower_bound");
  if (auto why = gate_reason(ctx, false, true)) return not_met(r, *why);
  Fold fold;
  r.details["components"] = nlohmann::json::array();
  for (const auto& h : ctx.components) {
    DegreeStats st = avg_degrees(ctx.g, h);
    r.details["components"].push_back({{"component", h.vertices.front()},
                                       {"d_H", h.diameter},
                                       {"avg_out", st.avg_out.to_short_string()}});
    if (h.diameter < ctx.vc.diam_threshold) continue;
    if (st.avg_out >= ctx.vc.deg_floor) {
      fold.hold();
    } else {
      fold.fail("component at " + std::to_string(h.vertices.front()) +
                " d_H=" + std::to_string(h.diameter) + " deg+=" +
                st.avg_out.to_short_string() + " < " +
                ctx.vc.deg_floor.to_short_string());
    }
  }
  r.details["floor"] = ctx.vc.deg_floor.to_short_string();
  r.details["diam_threshold"] = ctx.vc.diam_threshold;
  return fold.finish(r, "diam(H) below threshold");
}

CheckResult check_sac_at(const VerifyContext& ctx, const Component& h,
                         const std::vector<Player>& z, int x) {
  CheckResult r = start(ctx, "sac");
  if (z.empty()) throw ValidationError("Z must be nonempty");
  std::vector<char> mask(static_cast<std::size_t>(ctx.g.n()), 0);
  for (Player v : z) {
    if (!h.contains(v)) {
      throw ValidationError("node " + std::to_string(v) + " is not in H");
    }
    mask[v] = 1;
  }
  if (!induced_connected(ctx.g, mask)) {
    throw ValidationError("Z is not connected");
  }
  Distance zdiam = 0;
  auto zs = members_of(mask);
  for (Player a : zs) {
    for (Player b : zs) zdiam = std::max(zdiam, induced_distance(ctx.g, mask, a, b));
  }
  std::int64_t weight = 0;
  for (Player v : zs) weight += h.hanging_weight[v];
  r.details["z"] = zs;
  r.details["x"] = x;
  r.details["diam_z"] = zdiam;
  r.details["d_H"] = h.diameter;
  r.details["weight"] = weight;
  if (auto why = gate_reason(ctx, false, false)) return not_met(r, *why);
  if (zdiam > x) return not_met(r, "diam(Z) > X");
  if (h.diameter < 4 * x + 3) return not_met(r, "needs d_H >= 4X+3");
  Rational denom = Rational(h.diameter, 2) - Rational(2 * x + 1);
  Rational bound = ctx.cfg.alpha / denom;
  r.details["bound"] = bound.to_short_string();
  if (Rational(weight) <= bound) {
    r.verdict = Verdict::kHolds;
  } else {
    r.verdict = Verdict::kViolated;
    r.witness = "Z=" + join(zs) + " X=" + std::to_string(x) + " sum|T|=" +
                std::to_string(weight) + " > " + bound.to_short_string();
  }
  return r;
}

CheckResult check_sac(VerifyContext& ctx) {
  CheckResult r = start(ctx, "sac");
  if (auto why = gate_reason(ctx, false, true)) return not_met(r, *why);
  Fold fold;
  std::int64_t sites = 0;
  for (const auto& h : ctx.components) {
    std::vector<std::vector<Player>> zs;
    for (Player v : h.vertices) zs.push_back({v});
    if (ctx.vc.sac_max_x >= 1) {
      for (auto [a, b] : h.edges) zs.push_back({a, b});
    }
    for (const auto& z : zs) {
      int x = static_cast<int>(z.size()) - 1;
      CheckResult one = check_sac_at(ctx, h, z, x);
      if (one.verdict == Verdict::kHolds) {
        ++sites;
        fold.hold();
      } else if (one.verdict == Verdict::kViolated) {
        ++sites;
        fold.fail(one.witness);
      }
    }
  }
  r.details["sites"] = sites;
  return fold.finish(r, "needs d_H >= 4X+3");
}

CheckResult check_leaf_weight(VerifyContext& ctx) {
  CheckResult r = start(ctx, "leaf_weight");
  if (auto why = gate_reason(ctx, true, true)) return not_met(r, *why);
  Rational thr = leaf_threshold(ctx.cfg, ctx.vc);
  r.details["threshold"] = thr.to_short_string();
  r.details["k"] = ctx.vc.k.to_short_string();
  Fold fold;
  for_each_forest(ctx, fold, r.details["sites"],
                  [&](const ForestSite& site, nlohmann::json& entry) {
    const auto& f = site.forest;
    bool far = Rational(site.h->diameter) > thr;
    entry["leaves"] = nlohmann::json::array();
    for (Player v : f.nodes) {
      if (f.children.count(v) && !f.children.at(v).empty()) continue;
      int w = f.aa_weight.at(v);
      entry["leaves"].push_back({{"v", v}, {"aa_weight", w}});
      if (!far) continue;
      if (Rational(w) >= ctx.vc.k) {
        fold.hold();
      } else {
        fold.fail("root=" + std::to_string(site.root) + " leaf v=" +
                  std::to_string(v) + " |H(AA)|=" + std::to_string(w) +
                  " < K=" + ctx.vc.k.to_short_string() + " d_H=" +
                  std::to_string(site.h->diameter));
      }
    }
  });
  return fold.finish(r, "d_H not above leaf threshold or no leaves");
}

CheckResult check_simple_bridge(VerifyContext& ctx) {
  CheckResult r = start(ctx, "simple_bridge");
  if (auto why = gate_reason(ctx, true, true)) return not_met(r, *why);
  Rational thr = far_threshold(ctx.cfg, ctx.vc);
  r.details["threshold"] = thr.to_short_string();
  r.details["k"] = ctx.vc.k.to_short_string();
  Fold fold;
  for_each_forest(ctx, fold, r.details["sites"],
                  [&](const ForestSite& site, nlohmann::json& entry) {
    const auto& f = site.forest;
    entry["paths"] = nlohmann::json::array();
    for (Player w1 : f.nodes) {
      if (!tree_two_node(f, w1)) continue;
      Player w0 = f.parent.at(w1);
      Player w2 = only_child(f, w1);
      std::pair<Player, Player> edge{-1, -1};
      bool bridged = has_exit_bridge(ctx.g, f, w1, w2, &edge);
      Distance d = ctx.g.dist(site.root, w1);
      int w = f.aa_weight.at(w1);
      entry["paths"].push_back({{"w0", w0}, {"w1", w1}, {"w2", w2},
                                {"d_u_w1", distance_json(d)},
                                {"bridge", bridged},
                                {"aa_weight", w}});
      if (!bridged || Rational(d) < thr) continue;
      if (Rational(w) >= ctx.vc.k) {
        fold.hold();
      } else {
        fold.fail("root=" + std::to_string(site.root) + " w0=" +
                  std::to_string(w0) + " w1=" + std::to_string(w1) + " w2=" +
                  std::to_string(w2) + " bridge=" +
                  std::to_string(edge.first) + "-" +
                  std::to_string(edge.second) + " |H(AA(w1))|=" +
                  std::to_string(w) + " < K=" + ctx.vc.k.to_short_string());
      }
    }
  });
  return fold.finish(r, "no far forest 2-path with an exit bridge");
}

CheckResult check_tec(VerifyContext& ctx) {
  CheckResult r = start(ctx, "tec");
  if (auto why = gate_reason(ctx, true, true)) return not_met(r, *why);
  Rational thr = far_threshold(ctx.cfg, ctx.vc);
  r.details["threshold"] = thr.to_short_string();
  r.details["k"] = ctx.vc.k.to_short_string();
  Fold fold;
  for_each_forest(ctx, fold, r.details["sites"],
                  [&](const ForestSite& site, nlohmann::json& entry) {
    const auto& f = site.forest;
    const auto& g = ctx.g;
    entry["paths"] = nlohmann::json::array();
    for (Player v1 : f.nodes) {
      if (!tree_two_node(f, v1)) continue;
      Player v2 = only_child(f, v1);
      if (!tree_two_node(f, v2)) continue;
      Player v0 = f.parent.at(v1);
      Player v3 = only_child(f, v2);
      Distance d = g.dist(site.root, v1);
      bool b1 = has_exit_bridge(g, f, v1, v2, nullptr);
      bool b2 = has_exit_bridge(g, f, v2, v3, nullptr);
      int w = f.aa_weight.at(v1);
      auto z1_minus = component_containing(g, f.sets.at(v1), v2);
      z1_minus[v1] = 1;
      for (Player x : f.sets.at(v3).members) z1_minus[x] = 0;
      std::int64_t lhs = static_cast<std::int64_t>(members_of(z1_minus).size());
      std::int64_t rhs = static_cast<std::int64_t>(f.sets.at(v3).size());
      entry["paths"].push_back({{"v", {v0, v1, v2, v3}},
                                {"d_u_v1", distance_json(d)},
                                {"bridges_empty", !b1 && !b2},
                                {"aa_weight_v1", w},
                                {"lhs", lhs},
                                {"rhs", rhs}});
      if (Rational(d) < thr || b1 || b2 || !(Rational(w) < ctx.vc.k)) continue;
      if (lhs >= rhs) {
        fold.hold();
      } else {
        fold.fail("root=" + std::to_string(site.root) + " path " +
                  join({v0, v1, v2, v3}) + " |(Z1+v1)-A(v3)|=" +
                  std::to_string(lhs) + " < |A(v3)|=" + std::to_string(rhs));
      }
    }
  });
  return fold.finish(r, "no forest 2-path meets the exchange preconditions");
}

CheckResult check_two_path_aa(VerifyContext& ctx) {
  CheckResult r = start(ctx, "two_path_aa");
  if (auto why = gate_reason(ctx, true, true)) return not_met(r, *why);
  Rational thr = far_threshold(ctx.cfg, ctx.vc);
  int l = two_path_min_l(ctx.cfg, ctx.vc);
  Rational diam_thr =
      Rational(ctx.vc.two_path_diam_a) * ctx.vc.k + Rational(ctx.vc.two_path_diam_b);
  r.details["threshold"] = thr.to_short_string();
  r.details["l"] = l;
  r.details["diam_threshold"] = diam_thr.to_short_string();
  r.details["k"] = ctx.vc.k.to_short_string();
  Fold fold;
  for_each_forest(ctx, fold, r.details["sites"],
                  [&](const ForestSite& site, nlohmann::json& entry) {
    const auto& f = site.forest;
    bool wide = Rational(site.h->diameter) > diam_thr;
    std::int64_t windows = 0;
    for (Player v1 : f.nodes) {
      if (!tree_two_node(f, v1)) continue;
      std::vector<Player> chain{f.parent.at(v1), v1};
      bool ok = true;
      while (static_cast<int>(chain.size()) < 2 * l + 1) {
        Player last = chain.back();
        if (!tree_two_node(f, last)) {
          ok = false;
          break;
        }
        chain.push_back(only_child(f, last));
      }
      // chain = v0..v_{2l}; v_{2l} must itself be a 2-node.
      if (!ok || !tree_two_node(f, chain.back())) continue;
      chain.push_back(only_child(f, chain.back()));
      ++windows;
      std::int64_t sum = 0;
      for (int i = 1; i <= 2 * l; ++i) sum += f.aa_weight.at(chain[i]);
      Distance d = ctx.g.dist(site.root, v1);
      if (!wide || Rational(d) < thr) continue;
      if (Rational(sum) >= ctx.vc.k) {
        fold.hold();
      } else {
        fold.fail("root=" + std::to_string(site.root) + " window " +
                  join(chain) + " sum|H(AA)|=" + std::to_string(sum) +
                  " < K=" + ctx.vc.k.to_short_string());
      }
    }
    entry["windows"] = windows;
  });
  return fold.finish(r, "no far forest 2-path window of length 2l+1");
}

CheckResult check_diameter_gap(VerifyContext& ctx) {
  CheckResult r = start(ctx, "diameter_gap");
  if (auto why = gate_reason(ctx, true, true)) return not_met(r, *why);
  const auto& g = ctx.g;
  const int n = ctx.cfg.n;
  Distance diam_g = diameter(g);
  r.details["diam_G"] = distance_json(diam_g);
  Fold fold;
  r.details["components"] = nlohmann::json::array();
  for (const auto& h : ctx.components) {
    // Attachment point v' of every node: the H node whose hanging tree
    // holds it.
    std::vector<Player> attach(static_cast<std::size_t>(n), -1);
    for (Player vp : h.vertices) {
      std::vector<Player> queue{vp};
      attach[vp] = vp;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Player y : g.neighbors(queue[head])) {
          if (attach[y] < 0 && !h.contains(y)) {
            attach[y] = vp;
            queue.push_back(y);
          }
        }
      }
    }
    Distance max_hop = 0;
    int max_tree = 0;
    std::string hop_witness;
    for (Player v = 0; v < n; ++v) {
      Distance d = g.dist(v, attach[v]);
      if (d > max_hop) {
        max_hop = d;
        hop_witness = "v=" + std::to_string(v) + " v'=" +
                      std::to_string(attach[v]) + " d=" + std::to_string(d);
      }
    }
    Player heavy = h.vertices.front();
    for (Player vp : h.vertices) {
      if (h.hanging_weight[vp] > max_tree) {
        max_tree = h.hanging_weight[vp];
        heavy = vp;
      }
    }
    r.details["components"].push_back({{"component", h.vertices.front()},
                                       {"d_H", h.diameter},
                                       {"max_hop", max_hop},
                                       {"max_tree", max_tree}});
    std::string at = "component at " + std::to_string(h.vertices.front()) + ": ";
    bool ok = true;
    if (diam_g > h.diameter + ctx.vc.diam_gap) {
      fold.fail(at + "diam(G)=" + std::to_string(diam_g) + " > d_H+" +
                std::to_string(ctx.vc.diam_gap) + "=" +
                std::to_string(h.diameter + ctx.vc.diam_gap));
      ok = false;
    }
    if (max_hop > ctx.vc.hop_cap) {
      fold.fail(at + hop_witness + " > " + std::to_string(ctx.vc.hop_cap));
      ok = false;
    }
    if (Rational(max_tree) > ctx.vc.tree_weight_frac * Rational(n)) {
      fold.fail(at + "|T(" + std::to_string(heavy) + ")|=" +
                std::to_string(max_tree) + " > " +
                (ctx.vc.tree_weight_frac * Rational(n)).to_short_string());
      ok = false;
    }
    if (ok) fold.hold();
  }
  return fold.finish(r, "no component");
}

CheckResult check_girth(VerifyContext& ctx) {
  CheckResult r = start(ctx, "girth");
  if (auto why = gate_reason(ctx, false, false)) return not_met(r, *why);
  Distance gi = girth(ctx.g);
  Rational bound = Rational(2) * ctx.cfg.alpha / Rational(ctx.cfg.n) + Rational(2);
  r.details["girth"] = distance_json(gi);
  r.details["bound"] = bound.to_short_string();
  if (gi == kUnreachable) return not_met(r, "graph is acyclic");
  if (Rational(gi) >= bound) {
    r.verdict = Verdict::kHolds;
  } else {
    r.verdict = Verdict::kViolated;
    r.witness = "girth=" + std::to_string(gi) + " < " + bound.to_short_string();
  }
  return r;
}

CheckResult check_poa_depth(VerifyContext& ctx) {
  CheckResult r = start(ctx, "poa_depth");
  if (auto why = gate_reason(ctx, false, false)) return not_met(r, *why);
  if (!ctx.g.connected()) return not_met(r, "graph is disconnected");
  if (!ctx.opt_cost) {
    if (ctx.cfg.n <= 6) {
      ctx.opt_cost = optimum_social_cost(ctx.cfg.n, ctx.cfg.alpha,
                                         std::uint64_t{1} << 21, ctx.vc.threads)
                         .cost;
      ctx.opt_source = "exhaustive";
    } else {
      ctx.opt_cost = closed_form_opt(ctx.cfg.n, ctx.cfg.alpha);
      ctx.opt_source = "closed form";
    }
  }
  Distance radius = kUnreachable;
  Player center = 0;
  for (Player v = 0; v < ctx.cfg.n; ++v) {
    Distance e = eccentricity(ctx.g, v);
    if (e < radius) {
      radius = e;
      center = v;
    }
  }
  Rational social = cost(ctx.cfg, ctx.g).social.value();
  r.details["social"] = social.to_short_string();
  r.details["opt"] = ctx.opt_cost->to_short_string();
  r.details["opt_source"] = ctx.opt_source;
  r.details["root"] = center;
  r.details["depth"] = radius;
  if (ctx.opt_cost->is_zero()) return not_met(r, "optimum cost is zero");
  Rational ratio = social / *ctx.opt_cost;
  r.details["ratio"] = ratio.to_short_string();
  if (ratio <= Rational(radius + 1)) {
    r.verdict = Verdict::kHolds;
  } else {
    r.verdict = Verdict::kViolated;
    r.witness = "c/OPT=" + ratio.to_short_string() + " > depth+1=" +
                std::to_string(radius + 1) + " from root " +
                std::to_string(center);
  }
  return r;
}

CheckResult check_degree_cap(VerifyContext& ctx) {
  CheckResult r = start(ctx, "degree_cap");
  if (auto why = gate_reason(ctx, true, true)) return not_met(r, *why);
  Fold fold;
  int empirical = 0;
  for (const auto& h : ctx.components) {
    DegreeStats st = avg_degrees(ctx.g, h);
    empirical = std::max(empirical, st.max_out);
    if (h.diameter > ctx.vc.degree_cap_diam) continue;
    if (st.max_out <= ctx.vc.degree_cap) {
      fold.hold();
    } else {
      Player v = static_cast<Player>(
          std::max_element(st.out.begin(), st.out.end()) - st.out.begin());
      fold.fail("node " + std::to_string(v) + " owns " +
                std::to_string(st.max_out) + " links of H > " +
                std::to_string(ctx.vc.degree_cap) + " with d_H=" +
                std::to_string(h.diameter));
    }
  }
  r.details["max_out"] = empirical;
  r.details["cap"] = ctx.vc.degree_cap;
  return fold.finish(r, "d_H above small-diameter cap range");
}

CheckResult check_buy_link_bound(VerifyContext& ctx) {
  CheckResult r = start(ctx, "buy_link_bound");
  if (auto why = gate_reason(ctx, false, true)) return not_met(r, *why);
  Fold fold;
  std::int64_t sites = 0;
  for (const auto& h : ctx.components) {
    for (Player w : h.vertices) {
      for (CoveringPolicy policy : {CoveringPolicy::kLex2, CoveringPolicy::kAll}) {
        TwoEdgeCovering cov = make_covering(ctx.g, h, w, policy);
        for (const auto& [v, targets] : cov.j) {
          if (ctx.g.dist(v, w) <= 1) continue;
          CheckResult one = buy_link_lower_bound_check(ctx.cfg, ctx.g, v, w,
                                                       targets, ctx.gate);
          if (one.verdict == Verdict::kHolds) {
            ++sites;
            fold.hold();
          } else if (one.verdict == Verdict::kViolated) {
            ++sites;
            fold.fail(one.witness);
          }
        }
      }
    }
  }
  r.details["sites"] = sites;
  return fold.finish(r, "no v, w with d(v,w) > 1");
}

namespace {

CheckResult forest_lemma(VerifyContext& ctx, const std::string& id,
                         CheckResult (*lemma)(const OwnedGraph&,
                                              const DominanceForest&)) {
  CheckResult r = start(ctx, id);
  r.nonstandard = !ctx.vc.standard();
  if (ctx.components.empty()) {
    return not_met(r, "no non-trivial biconnected component");
  }
  Fold fold;
  r.details["sites"] = nlohmann::json::array();
  for (const auto& h : ctx.components) {
    std::string error;
    auto site = forest_for(ctx, h, &error);
    if (!site) {
      fold.fail(error);
      continue;
    }
    CheckResult one = lemma(ctx.g, site->forest);
    r.details["sites"].push_back({{"component", h.vertices.front()},
                                  {"root", site->root},
                                  {"verdict", verdict_name(one.verdict)},
                                  {"details", one.details}});
    if (one.verdict == Verdict::kHolds) fold.hold();
    if (one.verdict == Verdict::kViolated) fold.fail(one.witness);
  }
  return fold.finish(r, "no applicable site");
}

}  // namespace

const std::vector<CheckerInfo>& checker_registry() {
  static const std::vector<CheckerInfo> registry = [] {
    std::vector<CheckerInfo> v = {
        {"buy_link_bound", "|A^w_J(v)| <= alpha/(r-1), r = d(v,w) > 1",
         check_buy_link_bound},
        {"connectivity",
         "(Z + w1) minus A(w2) is connected on forest 2-paths w0-w1-w2",
         [](VerifyContext& c) {
           return forest_lemma(c, "connectivity", check_connectivity);
         }},
        {"deg_lower_bound", "diam(H) >= 37 implies deg+(H) >= 1 + 1/221",
         check_deg_lower_bound},
        {"degree_cap", "d_H <= 4 implies deg+_H(v) <= 7 (alpha > n)",
         check_degree_cap},
        {"diameter_gap",
         "alpha > n: diam(G) <= diam(H) + 154, d(v,v') <= 77, |T(v')| <= 18n/19",
         check_diameter_gap},
        {"girth", "girth >= 2 alpha/n + 2 for non-tree equilibria",
         check_girth},
        {"h3_weight_cap", "every H3 edge weight is below 74",
         check_h3_weight_cap},
        {"inclusion", "v' in A_i(v) implies A(v') within A_i(v)",
         [](VerifyContext& c) {
           return forest_lemma(c, "inclusion", check_inclusion);
         }},
        {"leaf_weight",
         "d_H > 6K rho + 4K + 2 implies |H(AA(v))| >= K at forest leaves",
         check_leaf_weight},
        {"nesting", "any two A sets are disjoint or nested",
         [](VerifyContext& c) {
           return forest_lemma(c, "nesting", check_nesting);
         }},
        {"poa_depth", "c(s)/OPT <= BFS depth + 1", check_poa_depth},
        {"sac",
         "diam(Z) <= X, d_H >= 4X+3 implies sum |T(v)| <= alpha/(d_H/2-2X-1)",
         check_sac},
        {"simple_bridge",
         "far forest 2-path with an exit bridge has |H(AA(w1))| >= K",
         check_simple_bridge},
        {"tec",
         "bridge-free far forest 2-path with light AA(v1) has "
         "|(Z1+v1)-A(v3)| >= |A(v3)|",
         check_tec},
        {"two_path_aa",
         "far forest 2-path windows of 2l nodes carry AA weight >= K",
         check_two_path_aa},
        {"two_path_bound", "maximal 2-paths of H have fewer than 74 interior nodes",
         check_two_path_bound},
    };
    std::sort(v.begin(), v.end(),
              [](const CheckerInfo& a, const CheckerInfo& b) { return a.id < b.id; });
    return v;
  }();
  return registry;
}

const CheckerInfo& find_checker(const std::string& id) {
  for (const auto& info : checker_registry()) {
    if (info.id == id) return info;
  }
  throw ValidationError("unknown checker '" + id + "'");
}

bool SuiteReport::any_violated() const {
  return std::any_of(results.begin(), results.end(), [](const CheckResult& r) {
    return r.verdict == Verdict::kViolated;
  });
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["ne_verified"] = ne_verified;
  j["nonstandard"] = nonstandard;
  j["results"] = nlohmann::json::array();
  for (const auto& r : results) j["results"].push_back(r.to_json());
  j["violated"] = any_violated();
  return j;
}

SuiteReport run_suite(const GameConfig& cfg, const StrategyVector& s,
                      const VerifierConfig& vc,
                      const std::vector<std::string>& ids, bool nonstandard) {
  if (!(vc.k > Rational(0))) throw ValidationError("K must be positive");
  std::vector<std::string> selected;
  if (ids.empty()) {
    for (const auto& info : checker_registry()) selected.push_back(info.id);
  } else {
    for (const auto& id : ids) selected.push_back(find_checker(id).id);
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  }
  VerifyContext ctx = VerifyContext::make(cfg, s, vc, nonstandard);
  SuiteReport report;
  report.ne_verified = ctx.gate.ne_verified;
  report.nonstandard = nonstandard || !vc.standard();
  for (const auto& id : selected) {
    report.results.push_back(find_checker(id).run(ctx));
  }
  return report;
}

}  // namespace ncg
