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
#include <vector>

#include "ncg/game.hpp"

namespace ncg {

// Center 0 owns every link.
StrategyVector star_strategy(int n);
// i owns (i, i+1).
StrategyVector path_strategy(int n);
// i owns (i, i+1 mod n); needs n >= 3.
StrategyVector cycle_strategy(int n);
// i owns every link to a larger id.
StrategyVector complete_strategy(int n);
// Hubs 0 and 1 joined by paths with the given numbers of links; interior
// nodes are numbered leg by leg from 2. Each link is owned by its end
// nearer hub 0 along the leg. Returns n through `n_out`.
StrategyVector theta_strategy(const std::vector<int>& legs, int* n_out);
// Each pair is linked with probability p; the smaller id owns it with
// probability `coin`. Fully determined by the seed.
StrategyVector random_strategy(int n, const Rational& p, const Rational& coin,
                               std::uint64_t seed);

}  // namespace ncg
