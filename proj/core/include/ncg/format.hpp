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

#include <iosfwd>
#include <string>
#include <string_view>

#include "ncg/game.hpp"

namespace ncg {

// A game instance as stored in a .ncg file.
struct Instance {
  GameConfig cfg;
  StrategyVector s;
};

// Canonical text:
//   ncg 1
//   n=<int> alpha=<p>/<q>
//   buy <owner> <target>      (one per bought edge, sorted)
// LF line endings, no trailing whitespace.
std::string to_ncg(const GameConfig& cfg, const StrategyVector& s);

// Parses the text above. Buy lines may come in any order and blank lines
// and CRLF endings are tolerated; duplicates, self-loops and out-of-range
// ids throw ValidationError.
Instance parse_ncg(std::string_view text);

Instance read_ncg_file(const std::string& path);
void write_ncg_file(const std::string& path, const GameConfig& cfg,
                    const StrategyVector& s);

}  // namespace ncg
