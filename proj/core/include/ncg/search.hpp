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
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncg/game.hpp"

namespace ncg {

// alpha as a function of n: coef * n + offset. Parses "3/2", "n", "2n",
// "n+1/2", "n-1", "3n/2+1".
struct AlphaExpr {
  Rational coef = Rational(0);
  Rational offset = Rational(1);

  Rational at(int n) const { return coef * Rational(n) + offset; }
  std::string to_string() const;
  static AlphaExpr parse(std::string_view text);
};

struct EnumerationConfig {
  enum class Mode { kExhaustive, kDynamics };

  int n = 3;
  Rational alpha = Rational(1);
  Mode mode = Mode::kExhaustive;
  // Exhaustive mode walks orientations of simple graphs (3^(n(n-1)/2)
  // states); with `full_vectors` it walks all (2^(n-1))^n strategy vectors.
  bool full_vectors = false;
  std::uint64_t budget = 14348907;  // 3^15, admits n <= 6
  // Dynamics mode.
  int starts = 32;
  int max_steps = 256;
  std::uint64_t seed = 1;
  bool dedup = false;
  int threads = 1;
};

struct CatalogEntry {
  StrategyVector s;
  ExtRational social;
  std::int64_t edges = 0;
  bool tree = false;
  Distance diameter = 0;
  Distance girth = kUnreachable;
  int nontrivial_components = 0;
};

struct NashCatalog {
  GameConfig cfg;
  std::string provenance;  // "exhaustive" or "dynamics"
  std::uint64_t states = 0;
  bool deduped = false;
  std::vector<CatalogEntry> entries;  // sorted by strategy vector
};

CatalogEntry summarize(const GameConfig& cfg, const StrategyVector& s);

// Throws GuardError when the state count exceeds the budget.
NashCatalog enumerate_nash(const EnumerationConfig& ec);

// True iff no player can improve; early-exits on the first improvement.
// Cheaper than is_nash when no witness is needed.
bool is_nash_fast(const GameConfig& cfg, const StrategyVector& s);

struct OptResult {
  Rational cost;
  StrategyVector witness;
};

// Brute force over undirected graphs (2^(n(n-1)/2) of them); guard
// `budget` on that count.
OptResult optimum_social_cost(int n, const Rational& alpha,
                              std::uint64_t budget = std::uint64_t{1} << 21,
                              int threads = 1);
// min(star, complete graph) social cost.
Rational closed_form_opt(int n, const Rational& alpha);

struct KnownPoaBound {
  Rational value;
  bool strict = false;
  std::string range;

  bool admits(const Rational& poa) const {
    return strict ? poa < value : poa <= value;
  }
};

// The published PoA bound applying to (n, alpha), if any. `all_trees`
// enables the tree bound of 5 when every equilibrium is known to be a tree.
std::optional<KnownPoaBound> known_poa_bound(int n, const Rational& alpha,
                                        bool all_trees);

struct PoAEstimate {
  Rational opt;
  Rational worst;
  Rational poa;
  bool exact = false;
  std::size_t ne_count = 0;
  bool all_trees = false;
  std::optional<KnownPoaBound> bound;
  bool within_bound = true;

  nlohmann::json to_json() const;
};

PoAEstimate poa_exact(int n, const Rational& alpha, int threads = 1);

struct SweepRow {
  int n = 0;
  Rational alpha;
  bool applicable = false;  // alpha > n
  std::size_t ne_count = 0;
  std::size_t trees = 0;
  std::vector<StrategyVector> counterexamples;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  bool falsified() const;
  nlohmann::json to_json() const;
};

SweepReport tree_conjecture_sweep(const std::vector<int>& ns,
                                  const std::vector<AlphaExpr>& alphas,
                                  int threads = 1);

// Groups entries up to ownership-preserving relabeling and keeps the
// smallest member of each class. Entries are returned unchanged (with
// `deduped` false) when n > max_n.
NashCatalog isomorphism_dedup(const NashCatalog& catalog, int max_n = 8);

// Canonical form: least sorted owned-edge list over all relabelings.
std::vector<OwnedEdge> canonical_form(const StrategyVector& s);

nlohmann::json catalog_index(const NashCatalog& catalog);
// Writes <dir>/ne_<i>.ncg and <dir>/index.json; creates dir.
void write_catalog(const std::string& dir, const NashCatalog& catalog);
// Loads and re-verifies every entry; throws ValidationError if one fails.
NashCatalog load_catalog(const std::string& dir);

}  // namespace ncg
