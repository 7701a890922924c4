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

#include "ncg/report.hpp"

#include "ncg/verdict.hpp"

namespace ncg {
namespace {

nlohmann::json distance_json(Distance d) {
  if (d == kUnreachable) return "inf";
  return d;
}

nlohmann::json ext_json(const ExtRational& x) { return x.to_string(); }

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kViolated:
      return "violated";
    case Verdict::kPreconditionNotMet:
      return "precondition_not_met";
  }
  return "unknown";
}

nlohmann::json CheckResult::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["claim"] = claim;
  j["verdict"] = verdict_name(verdict);
  j["witness"] = witness;
  j["nonstandard"] = nonstandard;
  j["details"] = details;
  return j;
}

nlohmann::json analyze_json(const GameConfig& cfg, const StrategyVector& s) {
  OwnedGraph g = build_graph(cfg, s);
  CostReport c = cost(cfg, g);
  nlohmann::json j;
  j["schema"] = 1;
  j["n"] = cfg.n;
  j["alpha"] = cfg.alpha.to_string();
  j["edges"] = g.edges().size();
  j["connected"] = g.connected();
  j["tree"] = g.is_tree();
  j["social_cost"] = ext_json(c.social);
  j["players"] = nlohmann::json::array();
  for (Player u = 0; u < cfg.n; ++u) {
    j["players"].push_back({{"id", u},
                            {"buys", s.buys(u)},
                            {"creation", c.creation[u].to_short_string()},
                            {"usage", ext_json(c.usage[u])},
                            {"cost", ext_json(c.total[u])}});
  }
  j["diameter"] = g.connected() ? distance_json(diameter(g)) : "inf";
  j["girth"] = distance_json(girth(g));
  j["components"] = nlohmann::json::array();
  for (const auto& h : nontrivial_components(g)) {
    nlohmann::json comp;
    comp["vertices"] = h.vertices;
    comp["edges"] = h.edges.size();
    comp["d_H"] = h.diameter;
    comp["girth"] = distance_json(girth(g, h));
    nlohmann::json weights = nlohmann::json::object();
    for (Player v : h.vertices) {
      weights[std::to_string(v)] = h.hanging_weight[v];
    }
    comp["hanging_weights"] = weights;
    comp["two_paths"] = nlohmann::json::array();
    for (const auto& p : two_paths(g, h)) {
      comp["two_paths"].push_back({{"nodes", p.nodes},
                                   {"closed", p.closed},
                                   {"oriented", p.oriented},
                                   {"interior", p.interior()}});
    }
    H3Multigraph h3 = build_h3(g, h);
    nlohmann::json h3j;
    h3j["vertices"] = h3.vertices;
    h3j["edges"] = nlohmann::json::array();
    for (const auto& e : h3.edges) {
      h3j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"weight", e.weight}});
    }
    h3j["total_weight"] = h3.total_weight();
    comp["h3"] = h3j;
    DegreeStats st = avg_degrees(g, h);
    comp["degree"] = {{"avg_deg", st.avg_deg.to_short_string()},
                      {"avg_out", st.avg_out.to_short_string()},
                      {"h3_form", st.h3_form ? nlohmann::json(st.h3_form->to_short_string())
                                             : nlohmann::json(nullptr)},
                      {"max_out", st.max_out},
                      {"v_ge2", st.v_ge2}};
    j["components"].push_back(comp);
  }
  return j;
}

nlohmann::json asets_json(const OwnedGraph& g, const Component& h,
                          const TwoEdgeCovering& cov,
                          const DominanceForest& f) {
  nlohmann::json j;
  j["schema"] = 1;
  j["component"] = h.vertices;
  j["root"] = cov.root;
  j["covering"] = covering_policy_name(cov.policy);
  j["nodes"] = nlohmann::json::array();
  for (Player v : f.nodes) {
    const ASet& a = f.sets.at(v);
    nlohmann::json node;
    node["v"] = v;
    node["j"] = a.targets;
    node["a"] = a.members;
    node["parts"] = a.parts;
    node["aa"] = f.aa.at(v);
    node["aa_weight"] = f.aa_weight.at(v);
    auto p = f.parent.find(v);
    node["parent"] = p == f.parent.end() ? nlohmann::json(nullptr)
                                         : nlohmann::json(p->second);
    node["d_root"] = distance_json(g.dist(cov.root, v));
    j["nodes"].push_back(node);
  }
  j["forest_edges"] = nlohmann::json::array();
  for (auto [a, b] : f.edges()) j["forest_edges"].push_back({a, b});
  j["tree_roots"] = f.tree_roots();
  return j;
}

}  // namespace ncg
