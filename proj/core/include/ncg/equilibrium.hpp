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
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ncg/game.hpp"
#include "ncg/verdict.hpp"

namespace ncg {

struct Buy {
  Player player = 0;
  Player target = 0;
};
struct Delete {
  Player player = 0;
  Player target = 0;
};
struct Swap {
  Player player = 0;
  Player old_target = 0;
  Player new_target = 0;
};
// Sell every edge in `deleted` and buy one link to `buy_target`.
struct MultiDeleteBuy {
  Player player = 0;
  std::vector<Player> deleted;
  Player buy_target = 0;
};
// Replace s_player wholesale. Used for best-response witnesses that are
// not a single move of the other kinds.
struct Rewire {
  Player player = 0;
  std::vector<Player> targets;
};

using Deviation = std::variant<Buy, Delete, Swap, MultiDeleteBuy, Rewire>;

Player deviating_player(const Deviation& d);

// "buy v w", "delete v w", "swap v a b", "multidb v [a,b] w",
// "rewire v [a,b]".
std::string to_string(const Deviation& d);
Deviation parse_deviation(std::string_view text);

// s with the deviation applied. Throws ValidationError if `d` is not valid
// for s.
StrategyVector apply_to_strategy(const GameConfig& cfg,
                                 const StrategyVector& s, const Deviation& d);

struct DeviationOutcome {
  ExtRational delta_cost;
  StrategyVector deviated;
  OwnedGraph deviated_graph;
};

// Full recomputation of the deviated graph and the deviating player's exact
// cost change.
DeviationOutcome apply_deviation(const GameConfig& cfg,
                                 const StrategyVector& s, const Deviation& d);

// Evaluates c_u for arbitrary replacement strategies of one player, with the
// rest of s fixed. Uses bitmask BFS; requires n <= 64.
class ResponseEvaluator {
 public:
  ResponseEvaluator(const GameConfig& cfg, const StrategyVector& s, Player u);

  Player player() const { return u_; }
  // c_u when u buys exactly `targets`.
  ExtRational cost(const std::vector<Player>& targets) const;
  ExtRational current_cost() const { return current_; }

  // Cost scaled by alpha's denominator, as an exact integer; -1 encodes
  // infinity. Used by the enumeration hot loops.
  std::int64_t scaled_cost(std::uint64_t target_mask) const;
  std::uint64_t mask_of(const std::vector<Player>& targets) const;

 private:
  int n_;
  Player u_;
  std::int64_t alpha_num_;
  std::int64_t alpha_den_;
  std::vector<std::uint64_t> nbr_;  // adjacency of G without u's purchases
  std::uint64_t fixed_;             // players that bought a link to u
  ExtRational current_;
};

struct BestResponseOptions {
  int max_n = 25;
  int threads = 1;
};

struct BestResponse {
  std::vector<Player> targets;
  ExtRational cost;
  ExtRational delta;
};

// Scans all 2^(n-1) strategies of u. Ties go to the lexicographically
// smallest sorted target list. Throws GuardError above options.max_n.
BestResponse best_response_exact(const GameConfig& cfg,
                                 const StrategyVector& s, Player u,
                                 const BestResponseOptions& opts = {});

enum class DeviationClass { kBuy, kDelete, kSwap, kMultiDeleteBuy };

struct NashOptions {
  enum class Mode { kExact, kRestricted };
  Mode mode = Mode::kExact;
  std::set<DeviationClass> classes = {
      DeviationClass::kBuy, DeviationClass::kDelete, DeviationClass::kSwap,
      DeviationClass::kMultiDeleteBuy};
  int multi_delete_cap = 3;
  BestResponseOptions best_response;
};

struct NashVerdict {
  bool is_ne = true;
  std::optional<Deviation> witness;
  ExtRational witness_delta;
  NashOptions::Mode mode = NashOptions::Mode::kExact;
};

// Exact mode certifies; Restricted mode only refutes soundly. The witness
// is the most improving deviation found (smallest player on ties).
NashVerdict is_nash(const GameConfig& cfg, const StrategyVector& s,
                    const NashOptions& opts = {});

// Smallest single move that turns s_u into `targets`: Buy, Delete or Swap
// when the change is that small, Rewire otherwise.
Deviation simplest_deviation(const StrategyVector& s, Player u,
                             const std::vector<Player>& targets);

enum class ResCase { kCaseI, kCaseII, kBoth, kInapplicable };
std::string_view res_case_name(ResCase c);

struct DeleteBuyBound {
  ExtRational delta;             // exact, via apply_deviation
  ResCase case_tag = ResCase::kInapplicable;
  std::optional<Rational> bound_i;
  std::optional<Rational> bound_ii;
  std::optional<std::int64_t> res_i;
  std::optional<std::int64_t> res_ii;
  // Case (i) with the detour charged as d(v, x) = d(v_1, x) + 1 per leg.
  // The literal res_i undercounts when the exit neighbour y sits one layer
  // beyond x as seen from w; res_i + 2 is what the rerouting really costs.
  std::optional<Rational> bound_i_repaired;
  std::optional<std::int64_t> res_i_repaired;
  std::int64_t a_size = 0;

  // Tightest applicable bound, literal formula.
  std::optional<Rational> bound() const;
  // Same with case (i) repaired.
  std::optional<Rational> sound_bound() const;
};

// v sells the edges to `j_targets` (all owned by v, at least two) and buys
// a link to w. Compares the exact cost change with the rerouting bound in
// whichever of its two cases applies. g must be connected.
DeleteBuyBound delete_k_buy_bound(const GameConfig& cfg, const OwnedGraph& g,
                                  Player v,
                                  const std::vector<Player>& j_targets,
                                  Player w);

// |A^w_J(v)| <= alpha / (r - 1) with r = d(v, w). PreconditionNotMet when
// r <= 1 or when the gate does not admit the input.
CheckResult buy_link_lower_bound_check(const GameConfig& cfg,
                                       const OwnedGraph& g, Player v,
                                       Player w,
                                       const std::vector<Player>& j_targets,
                                       const Gate& gate);

}  // namespace ncg
