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

#include <ostream>
#include <string>
#include <vector>

#include "ncg/asets.hpp"
#include "ncg/game.hpp"
#include "ncg/verifiers.hpp"

namespace ncg::testing {

// A constructed input on which one checker must report Violated.
struct NegativeControl {
  std::string checker;
  std::string description;
  GameConfig cfg;
  StrategyVector s;
  VerifierConfig vc;
};

// Keeps discovered ctest names readable.
inline void PrintTo(const NegativeControl& c, std::ostream* os) { *os << c.checker; }

// One control per graph checker in the registry, sorted by checker id.
// The forest lemmas (nesting, inclusion, connectivity) are covered by
// tampered_forest_* below instead.
std::vector<NegativeControl> graph_negative_controls();

struct TamperedForest {
  OwnedGraph g;
  DominanceForest forest;
};

TamperedForest tampered_forest_nesting();
TamperedForest tampered_forest_inclusion();
TamperedForest tampered_forest_connectivity();

// Cycle 0..n-1 where each listed node owns both of its cycle links, every
// other link (i, i+1) is owned by i, plus extra (owner, target) links.
StrategyVector cycle_with_owners(int n, const std::vector<Player>& doubles,
                                 const std::vector<OwnedEdge>& extra = {});

}  // namespace ncg::testing
