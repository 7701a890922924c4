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

#include "ncg/equilibrium.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>

#include "ncg/asets.hpp"
#include "ncg/error.hpp"
#include "ncg/structure.hpp"

namespace ncg {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string list_text(const std::vector<Player>& xs) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ",";
    out << xs[i];
  }
  out << "]";
  return out.str();
}

void check_player(const GameConfig& cfg, Player p, const char* what) {
  if (p < 0 || p >= cfg.n) {
    throw ValidationError(std::string(what) + " out of range: " +
                          std::to_string(p));
  }
}

// Lexicographic order of the sorted member lists of two bitmasks.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  int low = std::countr_zero(diff);
  std::uint64_t above = low == 63 ? 0 : ~((std::uint64_t{2} << low) - 1);
  if (a & (std::uint64_t{1} << low)) return (b & above) != 0;
  return (a & above) == 0;
}

// (cost, mask) ordering with -1 meaning infinite cost.
bool better(std::int64_t cost_a, std::uint64_t mask_a, std::int64_t cost_b,
            std::uint64_t mask_b) {
  if (cost_a != cost_b) {
    if (cost_a < 0) return false;
    if (cost_b < 0) return true;
    return cost_a < cost_b;
  }
  return lex_less(mask_a, mask_b);
}

std::vector<Player> mask_players(std::uint64_t mask) {
  std::vector<Player> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

ExtRational from_scaled(std::int64_t scaled, std::int64_t den) {
  if (scaled < 0) return ExtRational::infinity();
  return ExtRational(Rational(scaled, den));
}

std::vector<Player> parse_list(std::string_view text) {
  std::vector<Player> out;
  std::string item;
  for (char c : text) {
    if (c == ',') {
      if (!item.empty()) out.push_back(std::stoi(item));
      item.clear();
    } else if (c != ' ') {
      item += c;
    }
  }
  if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

Player deviating_player(const Deviation& d) {
  return std::visit([](const auto& x) { return x.player; }, d);
}

std::string to_string(const Deviation& d) {
  return std::visit(
      Overloaded{
          [](const Buy& x) {
            return "buy " + std::to_string(x.player) + " " +
                   std::to_string(x.target);
          },
          [](const Delete& x) {
            return "delete " + std::to_string(x.player) + " " +
                   std::to_string(x.target);
          },
          [](const Swap& x) {
            return "swap " + std::to_string(x.player) + " " +
                   std::to_string(x.old_target) + " " +
                   std::to_string(x.new_target);
          },
          [](const MultiDeleteBuy& x) {
            return "multidb " + std::to_string(x.player) + " " +
                   list_text(x.deleted) + " " + std::to_string(x.buy_target);
          },
          [](const Rewire& x) {
            return "rewire " + std::to_string(x.player) + " " +
                   list_text(x.targets);
          },
      },
      d);
}

Deviation parse_deviation(std::string_view text) {
  auto fail = [&]() -> Deviation {
    throw ValidationError("bad deviation '" + std::string(text) + "'");
  };
  try {
    std::string s(text);
    auto open = s.find('[');
    auto close = s.find(']');
    std::vector<Player> list;
    if (open != std::string::npos) {
      if (close == std::string::npos || close < open) return fail();
      list = parse_list(std::string_view(s).substr(open + 1, close - open - 1));
      s = s.substr(0, open) + " @ " + s.substr(close + 1);
    }
    std::istringstream in(s);
    std::vector<std::string> words;
    for (std::string w; in >> w;) words.push_back(w);
    if (words.empty()) return fail();
    const std::string& kind = words[0];
    if (kind == "buy" && words.size() == 3) {
      return Buy{std::stoi(words[1]), std::stoi(words[2])};
    }
    if (kind == "delete" && words.size() == 3) {
      return Delete{std::stoi(words[1]), std::stoi(words[2])};
    }
    if (kind == "swap" && words.size() == 4) {
      return Swap{std::stoi(words[1]), std::stoi(words[2]),
                  std::stoi(words[3])};
    }
    if (kind == "multidb" && words.size() == 4 && words[2] == "@") {
      return MultiDeleteBuy{std::stoi(words[1]), list, std::stoi(words[3])};
    }
    if (kind == "rewire" && words.size() == 3 && words[2] == "@") {
      return Rewire{std::stoi(words[1]), list};
    }
  } catch (const std::logic_error&) {
    // std::stoi failures fall through to the uniform message.
  }
  return fail();
}

StrategyVector apply_to_strategy(const GameConfig& cfg,
                                 const StrategyVector& s, const Deviation& d) {
  s.validate(cfg.n);
  StrategyVector out = s;
  std::visit(
      Overloaded{
          [&](const Buy& x) {
            check_player(cfg, x.player, "player");
            check_player(cfg, x.target, "target");
            if (x.target == x.player || s.owns(x.player, x.target)) {
              throw ValidationError("invalid " + to_string(d));
            }
            out.add(x.player, x.target);
          },
          [&](const Delete& x) {
            check_player(cfg, x.player, "player");
            if (!s.owns(x.player, x.target)) {
              throw ValidationError("invalid " + to_string(d) +
                                    ": link not owned");
            }
            out.remove(x.player, x.target);
          },
          [&](const Swap& x) {
            check_player(cfg, x.player, "player");
            check_player(cfg, x.new_target, "target");
            if (!s.owns(x.player, x.old_target) ||
                s.owns(x.player, x.new_target) || x.new_target == x.player) {
              throw ValidationError("invalid " + to_string(d));
            }
            out.remove(x.player, x.old_target);
            out.add(x.player, x.new_target);
          },
          [&](const MultiDeleteBuy& x) {
            check_player(cfg, x.player, "player");
            check_player(cfg, x.buy_target, "target");
            std::vector<Player> del = x.deleted;
            std::sort(del.begin(), del.end());
            if (del.empty() ||
                std::adjacent_find(del.begin(), del.end()) != del.end()) {
              throw ValidationError("invalid " + to_string(d) +
                                    ": deleted set empty or repeated");
            }
            for (Player t : del) {
              if (!s.owns(x.player, t)) {
                throw ValidationError("invalid " + to_string(d) +
                                      ": link not owned");
              }
              out.remove(x.player, t);
            }
            if (x.buy_target == x.player || out.owns(x.player, x.buy_target)) {
              throw ValidationError("invalid " + to_string(d) +
                                    ": bad buy target");
            }
            out.add(x.player, x.buy_target);
          },
          [&](const Rewire& x) {
            check_player(cfg, x.player, "player");
            for (Player t : x.targets) {
              check_player(cfg, t, "target");
              if (t == x.player) throw ValidationError("self purchase");
            }
            out.set(x.player, x.targets);
          },
      },
      d);
  return out;
}

DeviationOutcome apply_deviation(const GameConfig& cfg,
                                 const StrategyVector& s, const Deviation& d) {
  StrategyVector next = apply_to_strategy(cfg, s, d);
  Player u = deviating_player(d);
  OwnedGraph before = build_graph(cfg, s);
  OwnedGraph after = build_graph(cfg, next);
  DeviationOutcome out;
  out.delta_cost = player_cost(cfg, after, u) - player_cost(cfg, before, u);
  out.deviated = std::move(next);
  out.deviated_graph = std::move(after);
  return out;
}

ResponseEvaluator::ResponseEvaluator(const GameConfig& cfg,
                                     const StrategyVector& s, Player u)
    : n_(cfg.n),
      u_(u),
      alpha_num_(cfg.alpha.num()),
      alpha_den_(cfg.alpha.den()),
      nbr_(static_cast<std::size_t>(cfg.n), 0),
      fixed_(0) {
  cfg.validate();
  s.validate(cfg.n);
  if (n_ > 64) throw GuardError("bitmask evaluation needs n <= 64");
  check_player(cfg, u, "player");
  for (Player o = 0; o < n_; ++o) {
    if (o == u) continue;
    for (Player t : s.buys(o)) {
      if (t == u) {
        fixed_ |= std::uint64_t{1} << o;
      } else {
        nbr_[o] |= std::uint64_t{1} << t;
        nbr_[t] |= std::uint64_t{1} << o;
      }
    }
  }
  current_ = from_scaled(scaled_cost(mask_of(s.buys(u))), alpha_den_);
}

std::uint64_t ResponseEvaluator::mask_of(
    const std::vector<Player>& targets) const {
  std::uint64_t mask = 0;
  for (Player t : targets) mask |= std::uint64_t{1} << t;
  return mask;
}

std::int64_t ResponseEvaluator::scaled_cost(std::uint64_t target_mask) const {
  const std::uint64_t all =
      n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  std::uint64_t visited = std::uint64_t{1} << u_;
  std::uint64_t frontier = (fixed_ | target_mask) & ~visited;
  std::int64_t usage = 0;
  std::int64_t level = 0;
  while (frontier) {
    ++level;
    usage += level * std::popcount(frontier);
    visited |= frontier;
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) {
      next |= nbr_[std::countr_zero(f)];
    }
    frontier = next & ~visited;
  }
  if (visited != all) return -1;
  return alpha_num_ * std::popcount(target_mask) + alpha_den_ * usage;
}

ExtRational ResponseEvaluator::cost(const std::vector<Player>& targets) const {
  return from_scaled(scaled_cost(mask_of(targets)), alpha_den_);
}

BestResponse best_response_exact(const GameConfig& cfg,
                                 const StrategyVector& s, Player u,
                                 const BestResponseOptions& opts) {
  cfg.validate();
  if (cfg.n > opts.max_n || cfg.n > 62) {
    throw GuardError("best response needs n <= " +
                     std::to_string(std::min(opts.max_n, 62)) + ", got n=" +
                     std::to_string(cfg.n));
  }
  ResponseEvaluator eval(cfg, s, u);
  const int bits = cfg.n - 1;
  const std::uint64_t count = std::uint64_t{1} << bits;
  const std::uint64_t low_mask = (std::uint64_t{1} << u) - 1;
  auto deposit = [&](std::uint64_t k) {
    return (k & low_mask) | ((k >> u) << (u + 1));
  };

  int workers = std::max(1, opts.threads);
  if (count < 4096) workers = 1;
  struct Best {
    std::int64_t cost = -1;
    std::uint64_t mask = 0;
    bool set = false;
  };
  std::vector<Best> partial(static_cast<std::size_t>(workers));
  auto scan = [&](int w) {
    std::uint64_t begin = count * static_cast<std::uint64_t>(w) / workers;
    std::uint64_t end = count * static_cast<std::uint64_t>(w + 1) / workers;
    Best b;
    for (std::uint64_t k = begin; k < end; ++k) {
      std::uint64_t mask = deposit(k);
      std::int64_t c = eval.scaled_cost(mask);
      if (!b.set || better(c, mask, b.cost, b.mask)) {
        b = {c, mask, true};
      }
    }
    partial[w] = b;
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }
  Best best = partial[0];
  for (const auto& b : partial) {
    if (b.set && better(b.cost, b.mask, best.cost, best.mask)) best = b;
  }
  BestResponse out;
  out.targets = mask_players(best.mask);
  out.cost = from_scaled(best.cost, cfg.alpha.den());
  out.delta = out.cost - eval.current_cost();
  return out;
}

Deviation simplest_deviation(const StrategyVector& s, Player u,
                             const std::vector<Player>& targets) {
  const auto& cur = s.buys(u);
  std::vector<Player> removed;
  std::vector<Player> added;
  std::set_difference(cur.begin(), cur.end(), targets.begin(), targets.end(),
                      std::back_inserter(removed));
  std::set_difference(targets.begin(), targets.end(), cur.begin(), cur.end(),
                      std::back_inserter(added));
  if (removed.size() == 1 && added.empty()) return Delete{u, removed[0]};
  if (removed.empty() && added.size() == 1) return Buy{u, added[0]};
  if (removed.size() == 1 && added.size() == 1) {
    return Swap{u, removed[0], added[0]};
  }
  if (removed.size() >= 2 && added.size() == 1) {
    return MultiDeleteBuy{u, removed, added[0]};
  }
  return Rewire{u, targets};
}

namespace {

void restricted_scan(const GameConfig& cfg, const StrategyVector& s,
                     Player u, const NashOptions& opts,
                     std::optional<Deviation>& best,
                     ExtRational& best_delta) {
  ResponseEvaluator eval(cfg, s, u);
  const std::int64_t den = cfg.alpha.den();
  const ExtRational current = eval.current_cost();
  const std::uint64_t base = eval.mask_of(s.buys(u));
  auto consider = [&](std::uint64_t mask, Deviation d) {
    ExtRational delta = from_scaled(eval.scaled_cost(mask), den) - current;
    if (delta.sign() < 0 && (!best || delta < best_delta)) {
      best = std::move(d);
      best_delta = delta;
    }
  };
  const auto& owned = s.buys(u);
  std::vector<Player> others;
  for (Player t = 0; t < cfg.n; ++t) {
    if (t != u && !(base >> t & 1)) others.push_back(t);
  }
  auto bit = [](Player p) { return std::uint64_t{1} << p; };
  if (opts.classes.count(DeviationClass::kDelete)) {
    for (Player t : owned) consider(base & ~bit(t), Delete{u, t});
  }
  if (opts.classes.count(DeviationClass::kBuy)) {
    for (Player t : others) consider(base | bit(t), Buy{u, t});
  }
  if (opts.classes.count(DeviationClass::kSwap)) {
    for (Player a : owned) {
      for (Player b : others) {
        consider((base & ~bit(a)) | bit(b), Swap{u, a, b});
      }
    }
  }
  if (opts.classes.count(DeviationClass::kMultiDeleteBuy)) {
    const int k = static_cast<int>(owned.size());
    for (std::uint32_t sub = 1; sub < (1u << std::min(k, 20)); ++sub) {
      int size = std::popcount(sub);
      if (size > opts.multi_delete_cap) continue;
      std::vector<Player> del;
      std::uint64_t mask = base;
      for (int i = 0; i < k; ++i) {
        if (sub >> i & 1) {
          del.push_back(owned[i]);
          mask &= ~bit(owned[i]);
        }
      }
      for (Player w = 0; w < cfg.n; ++w) {
        if (w == u || (mask >> w & 1)) continue;
        consider(mask | bit(w), MultiDeleteBuy{u, del, w});
      }
    }
  }
}

}  // namespace

NashVerdict is_nash(const GameConfig& cfg, const StrategyVector& s,
                    const NashOptions& opts) {
  cfg.validate();
  s.validate(cfg.n);
  NashVerdict v;
  v.mode = opts.mode;
  if (opts.mode == NashOptions::Mode::kExact) {
    for (Player u = 0; u < cfg.n; ++u) {
      BestResponse br = best_response_exact(cfg, s, u, opts.best_response);
      if (br.delta.sign() < 0 && (!v.witness || br.delta < v.witness_delta)) {
        v.witness = simplest_deviation(s, u, br.targets);
        v.witness_delta = br.delta;
      }
    }
  } else {
    for (Player u = 0; u < cfg.n; ++u) {
      restricted_scan(cfg, s, u, opts, v.witness, v.witness_delta);
    }
  }
  v.is_ne = !v.witness.has_value();
  return v;
}

std::string_view res_case_name(ResCase c) {
  switch (c) {
    case ResCase::kCaseI:
      return "i";
    case ResCase::kCaseII:
      return "ii";
    case ResCase::kBoth:
      return "both";
    case ResCase::kInapplicable:
      return "inapplicable";
  }
  return "?";
}

std::optional<Rational> DeleteBuyBound::bound() const {
  if (bound_i && bound_ii) return std::min(*bound_i, *bound_ii);
  if (bound_i) return bound_i;
  return bound_ii;
}

std::optional<Rational> DeleteBuyBound::sound_bound() const {
  if (bound_i_repaired && bound_ii) return std::min(*bound_i_repaired, *bound_ii);
  if (bound_i_repaired) return bound_i_repaired;
  return bound_ii;
}

DeleteBuyBound delete_k_buy_bound(const GameConfig& cfg, const OwnedGraph& g,
                                  Player v,
                                  const std::vector<Player>& j_targets,
                                  Player w) {
  check_player(cfg, v, "player");
  check_player(cfg, w, "target");
  if (j_targets.size() < 2) {
    throw ValidationError("delete-k-buy needs at least two links");
  }
  for (Player t : j_targets) {
    if (t < 0 || t >= cfg.n || !g.owns(v, t)) {
      throw ValidationError("link " + std::to_string(v) + "-" +
                            std::to_string(t) + " is not owned by " +
                            std::to_string(v));
    }
  }
  if (!g.connected()) {
    throw ValidationError("delete-k-buy bound needs a connected graph");
  }
  const int n = g.n();
  StrategyVector s = extract_strategy(g);
  DeleteBuyBound out;
  out.delta =
      apply_deviation(cfg, s, MultiDeleteBuy{v, j_targets, w}).delta_cost;

  ASet a = a_set(g, w, v, j_targets);
  out.a_size = static_cast<std::int64_t>(a.size());
  const std::size_t k = j_targets.size();

  // Exit points of each part: members x != v with a neighbour outside A.
  std::vector<std::vector<Player>> exits(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (Player x : a.parts[i]) {
      if (x == v) continue;
      bool exit = std::any_of(g.neighbors(x).begin(), g.neighbors(x).end(),
                              [&](Player y) { return !a.contains(y); });
      if (exit) exits[i].push_back(x);
    }
  }

  for (std::size_t first = 0; first < k; ++first) {
    if (exits[first].empty()) continue;
    Distance l = 0;
    for (std::size_t i = 0; i < k && l != kUnreachable; ++i) {
      if (i == first) continue;
      std::vector<char> z(static_cast<std::size_t>(n), 0);
      for (Player x : a.parts[first]) z[x] = 1;
      for (Player x : a.parts[i]) z[x] = 1;
      l = std::max(l, induced_distance(g, z, j_targets[first], j_targets[i]));
    }
    if (l == kUnreachable) continue;
    Distance dx = kUnreachable;
    for (Player x : exits[first]) dx = std::min(dx, g.dist(j_targets[first], x));
    std::int64_t res = 2 * static_cast<std::int64_t>(dx) + l;
    if (!out.res_i || res < *out.res_i) out.res_i = res;
  }

  bool disjoint = true;
  {
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (const auto& part : a.parts) {
      for (Player x : part) {
        if (seen[x]++) disjoint = false;
      }
    }
  }
  if (disjoint) {
    bool all_exit = true;
    std::int64_t worst = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (a.parts[i].empty()) continue;
      if (exits[i].empty()) {
        all_exit = false;
        break;
      }
      Distance dx = kUnreachable;
      for (Player x : exits[i]) dx = std::min(dx, g.dist(v, x));
      worst = std::max<std::int64_t>(worst, 2 * static_cast<std::int64_t>(dx));
    }
    if (all_exit) out.res_ii = worst;
  }

  const Rational base = -cfg.alpha * Rational(static_cast<std::int64_t>(k) - 1) +
                        Rational(n) + usage_cost(g, w).value() -
                        usage_cost(g, v).value();
  if (out.res_i) {
    out.bound_i = base + Rational(*out.res_i * out.a_size);
    out.res_i_repaired = *out.res_i + 2;
    out.bound_i_repaired = base + Rational(*out.res_i_repaired * out.a_size);
  }
  if (out.res_ii) out.bound_ii = base + Rational(*out.res_ii * out.a_size);
  if (out.res_i && out.res_ii) {
    out.case_tag = ResCase::kBoth;
  } else if (out.res_i) {
    out.case_tag = ResCase::kCaseI;
  } else if (out.res_ii) {
    out.case_tag = ResCase::kCaseII;
  }
  return out;
}

CheckResult buy_link_lower_bound_check(const GameConfig& cfg,
                                       const OwnedGraph& g, Player v,
                                       Player w,
                                       const std::vector<Player>& j_targets,
                                       const Gate& gate) {
  check_player(cfg, v, "player");
  check_player(cfg, w, "target");
  for (Player t : j_targets) {
    if (t < 0 || t >= cfg.n || !g.owns(v, t)) {
      throw ValidationError("link " + std::to_string(v) + "-" +
                            std::to_string(t) + " is not owned by " +
                            std::to_string(v));
    }
  }
  CheckResult r;
  r.id = "buy_link_bound";
  r.claim = "|A^w_J(v)| <= alpha/(r-1), r = d(v,w) > 1";
  r.nonstandard = gate.nonstandard && !gate.ne_verified;
  Distance dist = g.dist(v, w);
  r.details["v"] = v;
  r.details["w"] = w;
  r.details["r"] = dist == kUnreachable ? -1 : dist;
  r.details["ne_verified"] = gate.ne_verified;
  if (!gate.admits()) {
    r.verdict = Verdict::kPreconditionNotMet;
    r.details["reason"] = "equilibrium not verified";
    return r;
  }
  if (dist == kUnreachable || dist <= 1) {
    r.verdict = Verdict::kPreconditionNotMet;
    r.details["reason"] = "needs 1 < d(v,w) < inf";
    return r;
  }
  ASet a = a_set(g, w, v, j_targets);
  Rational bound = cfg.alpha / Rational(dist - 1);
  r.details["a_size"] = a.size();
  r.details["bound"] = bound.to_short_string();
  if (Rational(static_cast<std::int64_t>(a.size())) <= bound) {
    r.verdict = Verdict::kHolds;
  } else {
    r.verdict = Verdict::kViolated;
    r.witness = "v=" + std::to_string(v) + " w=" + std::to_string(w) +
                " J=" + list_text(j_targets) + " |A|=" +
                std::to_string(a.size()) + " > " + bound.to_short_string();
  }
  return r;
}

}  // namespace ncg
