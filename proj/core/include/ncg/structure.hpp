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

#include <optional>
#include <utility>
#include <vector>

#include "ncg/game.hpp"

namespace ncg {

// A biconnected component H of G together with the hanging trees T(v).
struct Component {
  std::vector<Player> vertices;                   // sorted
  std::vector<std::pair<Player, Player>> edges;   // (a, b), a < b, sorted
  std::vector<char> member;                       // size n
  std::vector<std::vector<Player>> adjacency;     // inside H; size n
  std::vector<int> hanging_weight;                // |T(v)|; 0 off H
  Distance diameter = 0;                          // d_H

  bool nontrivial() const { return vertices.size() >= 3; }
  bool contains(Player v) const {
    return v >= 0 && v < static_cast<Player>(member.size()) && member[v];
  }
  bool has_edge(Player a, Player b) const;
  int degree(Player v) const {
    return static_cast<int>(adjacency.at(v).size());
  }
};

// Tarjan lowpoint decomposition, iterative. Returns every block (bridges
// included as 2-vertex components), sorted by smallest vertex then size.
std::vector<Component> biconnected_components(const OwnedGraph& g);
std::vector<Component> nontrivial_components(const OwnedGraph& g);

// Build a Component from an arbitrary vertex set, as if it were a block.
Component make_component(const OwnedGraph& g, std::vector<Player> vertices);

// A maximal path whose interior nodes have degree 2 in H. For a cycle H the
// single closed path starts and ends at its smallest vertex.
struct TwoPath {
  std::vector<Player> nodes;  // endpoints included
  bool closed = false;
  // Every interior node owns exactly the link to its successor (or every
  // one to its predecessor).
  bool oriented = false;

  int interior() const { return static_cast<int>(nodes.size()) - 2; }
};

std::vector<TwoPath> two_paths(const OwnedGraph& g, const Component& h);

struct H3Edge {
  Player a = 0;
  Player b = 0;
  int weight = 0;
};

struct H3Multigraph {
  std::vector<Player> vertices;
  std::vector<H3Edge> edges;

  bool empty() const { return vertices.empty(); }
  std::int64_t total_weight() const;
};

H3Multigraph build_h3(const OwnedGraph& g, const Component& h);

struct DegreeStats {
  std::vector<int> out;  // deg+_H, indexed by player
  std::vector<int> in;
  std::vector<int> deg;
  Rational avg_deg;
  Rational avg_out;
  std::optional<Rational> h3_form;  // empty when H3 is empty
  std::vector<Player> v_ge2;        // owns >= 2 links of H
  int max_out = 0;
};

DegreeStats avg_degrees(const OwnedGraph& g, const Component& h);

// f(x) = 2 + 2(x - 1) / (1 + 73x); throws ValidationError for x < 1.
Rational deg_lower_bound_value(const Rational& x);

// Layers A_r(u) for r = 0..ecc(u), restricted to H.
std::vector<std::vector<Player>> distance_layers(const OwnedGraph& g,
                                                 const Component& h,
                                                 Player u);
// Nodes of H farther than r from u.
std::vector<Player> beyond(const OwnedGraph& g, const Component& h, Player u,
                           Distance r);

Distance eccentricity(const OwnedGraph& g, Player u);
Distance diameter(const OwnedGraph& g);
// Distance inside the subgraph induced by `z` (a size-n membership mask).
Distance induced_distance(const OwnedGraph& g, const std::vector<char>& z,
                          Player a, Player b);
bool induced_connected(const OwnedGraph& g, const std::vector<char>& z);

// Length of the shortest cycle of H; kUnreachable when H is acyclic.
Distance girth(const OwnedGraph& g, const Component& h);
Distance girth(const OwnedGraph& g);

// argmin of D_G over V(H), smallest id on ties.
Player min_usage_node(const OwnedGraph& g, const Component& h);

}  // namespace ncg
