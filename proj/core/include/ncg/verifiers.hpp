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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncg/asets.hpp"
#include "ncg/game.hpp"
#include "ncg/structure.hpp"
#include "ncg/verdict.hpp"

namespace ncg {

struct VerifierConfig {
  int two_path_cap = 74;
  int h3_weight_cap = 74;
  Distance diam_threshold = 37;
  Rational deg_floor = Rational(222, 221);
  // Diameter bounds X tried by the suite for the small-subgraph check, with
  // Z ranging over single nodes (X = 0) and single links (X = 1).
  int sac_max_x = 1;
  // Leaf threshold: d_H > leaf_a*K*rho + leaf_b*K + leaf_c, rho = a/(a-n).
  std::int64_t leaf_a = 6;
  std::int64_t leaf_b = 4;
  std::int64_t leaf_c = 2;
  // Distance threshold shared by the bridge checks: d >= 1 + far_a*K*rho.
  std::int64_t far_a = 4;
  // 2-path block length: least l with 2^(l-1) >= two_path_log_factor*rho.
  std::int64_t two_path_log_factor = 9;
  // d_H > two_path_diam_a*K + two_path_diam_b.
  std::int64_t two_path_diam_a = 36;
  std::int64_t two_path_diam_b = 18;
  Distance diam_gap = 154;
  Distance hop_cap = 77;
  Rational tree_weight_frac = Rational(18, 19);
  int degree_cap = 7;
  Distance degree_cap_diam = 4;
  Rational k = Rational(1);

  std::optional<Player> root_override;
  CoveringPolicy covering = CoveringPolicy::kLex2;

  // Largest n for which the suite certifies the equilibrium itself.
  int verify_max_n = 16;
  int threads = 1;

  // True when every constant matches the defaults and no root override is
  // set. K and the covering policy are analysis parameters, not constants.
  bool standard() const;
};

// Everything a checker needs, computed once per instance.
struct VerifyContext {
  GameConfig cfg;
  StrategyVector s;
  OwnedGraph g;
  std::vector<Component> components;  // non-trivial only
  Gate gate;
  VerifierConfig vc;
  std::optional<Rational> opt_cost;   // filled on demand by poa_depth
  std::string opt_source;

  static VerifyContext make(const GameConfig& cfg, const StrategyVector& s,
                            const VerifierConfig& vc, bool nonstandard);
  // Root used for the A-set machinery on component h.
  Player root_for(const Component& h) const;
};

using Checker = std::function<CheckResult(VerifyContext&)>;

struct CheckerInfo {
  std::string id;
  std::string claim;
  Checker run;
};

// All checkers, sorted by id.
const std::vector<CheckerInfo>& checker_registry();
const CheckerInfo& find_checker(const std::string& id);

CheckResult check_two_path_bound(VerifyContext& ctx);
CheckResult check_h3_weight_cap(VerifyContext& ctx);
CheckResult check_deg_lower_bound(VerifyContext& ctx);
CheckResult check_sac(VerifyContext& ctx);
CheckResult check_leaf_weight(VerifyContext& ctx);
CheckResult check_two_path_aa(VerifyContext& ctx);
CheckResult check_simple_bridge(VerifyContext& ctx);
CheckResult check_tec(VerifyContext& ctx);
CheckResult check_diameter_gap(VerifyContext& ctx);
CheckResult check_girth(VerifyContext& ctx);
CheckResult check_poa_depth(VerifyContext& ctx);
CheckResult check_degree_cap(VerifyContext& ctx);
CheckResult check_buy_link_bound(VerifyContext& ctx);

// Sum of |T(v)| over a connected Z inside H against alpha/(d_H/2 - 2X - 1).
// Throws ValidationError when Z is not a connected subset of H.
CheckResult check_sac_at(const VerifyContext& ctx, const Component& h,
                         const std::vector<Player>& z, int x);

// Threshold helpers, exact. rho requires alpha > n.
Rational rho(const GameConfig& cfg);
Rational leaf_threshold(const GameConfig& cfg, const VerifierConfig& vc);
Rational far_threshold(const GameConfig& cfg, const VerifierConfig& vc);
int two_path_min_l(const GameConfig& cfg, const VerifierConfig& vc);

struct SuiteReport {
  std::vector<CheckResult> results;
  bool ne_verified = false;
  bool nonstandard = false;

  bool any_violated() const;
  nlohmann::json to_json() const;
};

// Runs the selected checkers (all when `ids` is empty) in id order.
SuiteReport run_suite(const GameConfig& cfg, const StrategyVector& s,
                      const VerifierConfig& vc,
                      const std::vector<std::string>& ids = {},
                      bool nonstandard = false);

}  // namespace ncg
