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

#include <nlohmann/json.hpp>

#include "ncg/asets.hpp"
#include "ncg/game.hpp"
#include "ncg/structure.hpp"

namespace ncg {

// Structural report for one instance: costs, blocks, hanging weights, H3,
// degree statistics and girth. Carries "schema": 1.
nlohmann::json analyze_json(const GameConfig& cfg, const StrategyVector& s);

// A sets, parts, AA sets, forest edges and AA weights for one component.
nlohmann::json asets_json(const OwnedGraph& g, const Component& h,
                          const TwoEdgeCovering& cov,
                          const DominanceForest& f);

}  // namespace ncg
