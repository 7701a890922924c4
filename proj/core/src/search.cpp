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

#include "ncg/search.hpp"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "ncg/equilibrium.hpp"
#include "ncg/error.hpp"
#include "ncg/format.hpp"
#include "ncg/structure.hpp"

namespace ncg {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp,
                          std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

// Runs body(w) for w in [0, workers) on separate threads.
template <class F>
void parallel_for(int workers, F&& body) {
  if (workers <= 1) {
    body(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
  for (auto& t : pool) t.join();
}

bool connected_masks(int n, const Mask* adj) {
  Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  Mask seen = 1;
  Mask frontier = 1;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == all;
}

// Sum of distances from u given neighbour masks; -1 if something is
// unreachable. `first` is u's own neighbourhood.
std::int64_t usage_from(int n, const Mask* nbr, int u, Mask first) {
  Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  Mask visited = bit(u);
  Mask frontier = first & ~visited;
  std::int64_t usage = 0;
  std::int64_t level = 0;
  while (frontier) {
    ++level;
    usage += level * std::popcount(frontier);
    visited |= frontier;
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= nbr[std::countr_zero(f)];
    frontier = next & ~visited;
  }
  return visited == all ? usage : -1;
}

// Exact equilibrium test over ownership masks.
bool nash_masks(int n, std::int64_t p, std::int64_t q, const Mask* owned) {
  Mask adj[64];
  for (int x = 0; x < n; ++x) adj[x] = 0;
  for (int x = 0; x < n; ++x) {
    adj[x] |= owned[x];
    for (Mask o = owned[x]; o; o &= o - 1) adj[std::countr_zero(o)] |= bit(x);
  }
  if (n > 1 && !connected_masks(n, adj)) return false;
  Mask nbr[64];
  for (int u = 0; u < n; ++u) {
    Mask fixed = 0;
    for (int x = 0; x < n; ++x) {
      if (x == u) {
        nbr[x] = 0;
        continue;
      }
      nbr[x] = adj[x] & ~bit(u);
      if (owned[x] & bit(u)) fixed |= bit(x);
    }
    auto cost = [&](Mask s) -> std::int64_t {
      std::int64_t usage = usage_from(n, nbr, u, fixed | s);
      if (usage < 0) return -1;
      return p * std::popcount(s) + q * usage;
    };
    std::int64_t current = cost(owned[u]);
    const Mask count = bit(n - 1);
    const Mask low = bit(u) - 1;
    for (Mask k = 0; k < count; ++k) {
      Mask s = (k & low) | ((k >> u) << (u + 1));
      if (s == owned[u]) continue;
      std::int64_t c = cost(s);
      if (c >= 0 && (current < 0 || c < current)) return false;
    }
  }
  return true;
}

StrategyVector masks_to_strategy(int n, const Mask* owned) {
  std::vector<std::vector<Player>> buys(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    for (Mask o = owned[x]; o; o &= o - 1) buys[x].push_back(std::countr_zero(o));
  }
  return StrategyVector(std::move(buys));
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

NashCatalog enumerate_exhaustive(const EnumerationConfig& ec) {
  const int n = ec.n;
  NashCatalog cat;
  cat.cfg = {n, ec.alpha};
  cat.provenance = "exhaustive";
  const auto pairs = all_pairs(n);
  const std::uint64_t count =
      ec.full_vectors
          ? checked_pow(2, static_cast<std::uint64_t>(n) * (n - 1), ec.budget)
          : checked_pow(3, pairs.size(), ec.budget);
  if (count > ec.budget) {
    throw GuardError("exhaustive enumeration at n=" + std::to_string(n) +
                     " needs more than " + std::to_string(ec.budget) +
                     " states (budget)");
  }
  cat.states = count;
  const std::int64_t p = ec.alpha.num();
  const std::int64_t q = ec.alpha.den();
  const int workers =
      count < 4096 ? 1 : std::max(1, std::min<int>(ec.threads, 64));
  std::vector<std::vector<StrategyVector>> found(
      static_cast<std::size_t>(workers));

  parallel_for(workers, [&](int w) {
    std::uint64_t begin = count * static_cast<std::uint64_t>(w) / workers;
    std::uint64_t end = count * static_cast<std::uint64_t>(w + 1) / workers;
    Mask owned[64];
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      for (int x = 0; x < n; ++x) owned[x] = 0;
      if (ec.full_vectors) {
        std::uint64_t rest = idx;
        for (int x = 0; x < n; ++x) {
          Mask k = rest & (bit(n - 1) - 1);
          rest >>= (n - 1);
          owned[x] = (k & (bit(x) - 1)) | ((k >> x) << (x + 1));
        }
      } else {
        std::uint64_t rest = idx;
        for (const auto& [a, b] : pairs) {
          int digit = static_cast<int>(rest % 3);
          rest /= 3;
          if (digit == 1) owned[a] |= bit(b);
          if (digit == 2) owned[b] |= bit(a);
        }
      }
      if (nash_masks(n, p, q, owned)) {
        found[w].push_back(masks_to_strategy(n, owned));
      }
    }
  });

  std::vector<StrategyVector> all;
  for (auto& part : found) {
    for (auto& s : part) all.push_back(std::move(s));
  }
  std::sort(all.begin(), all.end());
  for (const auto& s : all) cat.entries.push_back(summarize(cat.cfg, s));
  return cat;
}

NashCatalog enumerate_dynamics(const EnumerationConfig& ec) {
  const int n = ec.n;
  NashCatalog cat;
  cat.cfg = {n, ec.alpha};
  cat.provenance = "dynamics";
  cat.states = static_cast<std::uint64_t>(std::max(ec.starts, 0));
  const int workers = std::max(1, std::min(ec.threads, ec.starts));
  std::vector<std::vector<StrategyVector>> found(
      static_cast<std::size_t>(workers));

  parallel_for(workers, [&](int w) {
    for (int start = w; start < ec.starts; start += workers) {
      std::mt19937_64 rng(splitmix(ec.seed ^ splitmix(static_cast<std::uint64_t>(start))));
      std::vector<std::vector<Player>> buys(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (x != y && (rng() >> 63)) buys[x].push_back(y);
        }
      }
      StrategyVector s(std::move(buys));
      bool fixed_point = false;
      for (int step = 0; step < ec.max_steps && !fixed_point; ++step) {
        fixed_point = true;
        for (Player u = 0; u < n; ++u) {
          BestResponse br = best_response_exact(cat.cfg, s, u);
          if (br.delta.sign() < 0) {
            s.set(u, br.targets);
            fixed_point = false;
          }
        }
      }
      if (fixed_point && is_nash_fast(cat.cfg, s)) found[w].push_back(s);
    }
  });

  std::vector<StrategyVector> all;
  for (auto& part : found) {
    for (auto& s : part) all.push_back(std::move(s));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (const auto& s : all) cat.entries.push_back(summarize(cat.cfg, s));
  return cat;
}

std::string rational_term(const Rational& r) { return r.to_short_string(); }

}  // namespace

std::string AlphaExpr::to_string() const {
  std::string out;
  if (!coef.is_zero()) {
    if (coef == Rational(1)) {
      out = "n";
    } else if (coef.is_integer()) {
      out = rational_term(coef) + "n";
    } else {
      out = std::to_string(coef.num()) + "n/" + std::to_string(coef.den());
    }
  }
  if (offset.is_zero()) return out.empty() ? "0" : out;
  if (out.empty()) return rational_term(offset);
  if (offset.sign() > 0) return out + "+" + rational_term(offset);
  return out + "-" + rational_term(-offset);
}

AlphaExpr AlphaExpr::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  if (s.empty()) throw ValidationError("empty alpha expression");
  AlphaExpr e;
  e.coef = Rational(0);
  e.offset = Rational(0);
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i + 1;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    int sign = 1;
    if (term[0] == '+' || term[0] == '-') {
      sign = term[0] == '-' ? -1 : 1;
      term = term.substr(1);
    }
    if (term.empty()) throw ValidationError("bad alpha expression '" + s + "'");
    auto npos = term.find('n');
    if (npos != std::string::npos) {
      term.erase(npos, 1);
      if (term.empty()) term = "1";
      if (term[0] == '/') term = "1" + term;
      e.coef += Rational(sign) * Rational::parse(term);
    } else {
      e.offset += Rational(sign) * Rational::parse(term);
    }
    i = j;
  }
  return e;
}

CatalogEntry summarize(const GameConfig& cfg, const StrategyVector& s) {
  OwnedGraph g = build_graph(cfg, s);
  CatalogEntry e;
  e.s = s;
  e.social = cost(cfg, g).social;
  e.edges = static_cast<std::int64_t>(g.edges().size());
  e.tree = g.is_tree();
  e.diameter = g.connected() ? diameter(g) : kUnreachable;
  e.girth = girth(g);
  e.nontrivial_components = static_cast<int>(nontrivial_components(g).size());
  return e;
}

bool is_nash_fast(const GameConfig& cfg, const StrategyVector& s) {
  cfg.validate();
  s.validate(cfg.n);
  if (cfg.n > 62) throw GuardError("equilibrium test needs n <= 62");
  Mask owned[64];
  for (int x = 0; x < cfg.n; ++x) {
    owned[x] = 0;
    for (Player t : s.buys(x)) owned[x] |= bit(t);
  }
  return nash_masks(cfg.n, cfg.alpha.num(), cfg.alpha.den(), owned);
}

NashCatalog enumerate_nash(const EnumerationConfig& ec) {
  GameConfig{ec.n, ec.alpha}.validate();
  if (ec.n > 62) throw GuardError("enumeration needs n <= 62");
  NashCatalog cat = ec.mode == EnumerationConfig::Mode::kExhaustive
                        ? enumerate_exhaustive(ec)
                        : enumerate_dynamics(ec);
  if (ec.dedup) cat = isomorphism_dedup(cat);
  return cat;
}

OptResult optimum_social_cost(int n, const Rational& alpha,
                              std::uint64_t budget, int threads) {
  GameConfig cfg{n, alpha};
  cfg.validate();
  if (n > 62) throw GuardError("optimum search needs n <= 62");
  const auto pairs = all_pairs(n);
  const std::uint64_t count = checked_pow(2, pairs.size(), budget);
  if (count > budget) {
    throw GuardError("optimum search at n=" + std::to_string(n) +
                     " needs more than " + std::to_string(budget) +
                     " graphs (budget)");
  }
  const std::int64_t p = alpha.num();
  const std::int64_t q = alpha.den();
  const int workers = count < 4096 ? 1 : std::max(1, std::min(threads, 64));
  struct Best {
    std::int64_t cost = -1;
    std::uint64_t index = 0;
  };
  std::vector<Best> partial(static_cast<std::size_t>(workers));
  parallel_for(workers, [&](int w) {
    std::uint64_t begin = count * static_cast<std::uint64_t>(w) / workers;
    std::uint64_t end = count * static_cast<std::uint64_t>(w + 1) / workers;
    Best best;
    Mask adj[64];
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      for (int x = 0; x < n; ++x) adj[x] = 0;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (idx >> e & 1) {
          adj[pairs[e].first] |= bit(pairs[e].second);
          adj[pairs[e].second] |= bit(pairs[e].first);
        }
      }
      std::int64_t usage = 0;
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        std::int64_t d = usage_from(n, adj, u, adj[u]);
        if (d < 0) ok = false;
        usage += d;
      }
      if (!ok) continue;
      std::int64_t c = p * std::popcount(idx) + q * usage;
      if (best.cost < 0 || c < best.cost) best = {c, idx};
    }
    partial[w] = best;
  });
  Best best;
  for (const auto& b : partial) {
    if (b.cost >= 0 && (best.cost < 0 || b.cost < best.cost)) best = b;
  }
  std::vector<std::vector<Player>> buys(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    if (best.index >> e & 1) buys[pairs[e].first].push_back(pairs[e].second);
  }
  return {Rational(best.cost, q), StrategyVector(std::move(buys))};
}

Rational closed_form_opt(int n, const Rational& alpha) {
  const std::int64_t m = n;
  Rational star = alpha * Rational(m - 1) + Rational(2 * (m - 1) * (m - 1));
  Rational clique = alpha * Rational(m * (m - 1), 2) + Rational(m * (m - 1));
  return std::min(star, clique);
}

std::optional<KnownPoaBound> known_poa_bound(int n, const Rational& alpha,
                                        bool all_trees) {
  std::vector<KnownPoaBound> options;
  const Rational half_n(n, 2);
  if (alpha < Rational(1)) options.push_back({Rational(1), false, "alpha < 1"});
  if (alpha >= Rational(1) && alpha < Rational(2)) {
    options.push_back({Rational(4, 3), false, "1 <= alpha < 2"});
  }
  if (alpha >= Rational(2) && alpha * alpha * alpha < half_n) {
    options.push_back({Rational(4), false, "2 <= alpha < (n/2)^(1/3)"});
  }
  if (alpha >= Rational(2) && alpha * alpha * alpha >= half_n &&
      alpha * alpha < half_n) {
    options.push_back({Rational(6), false, "(n/2)^(1/3) <= alpha < (n/2)^(1/2)"});
  }
  if (alpha > Rational(4 * static_cast<std::int64_t>(n) - 13)) {
    options.push_back({Rational(5), true, "alpha > 4n-13"});
  }
  if (all_trees) options.push_back({Rational(5), false, "all equilibria are trees"});
  if (options.empty()) return std::nullopt;
  return *std::min_element(options.begin(), options.end(),
                           [](const KnownPoaBound& a, const KnownPoaBound& b) {
                             if (a.value != b.value) return a.value < b.value;
                             return a.strict && !b.strict;
                           });
}

nlohmann::json PoAEstimate::to_json() const {
  nlohmann::json j;
  j["opt"] = opt.to_short_string();
  j["worst"] = worst.to_short_string();
  j["poa"] = poa.to_short_string();
  j["poa_approx"] = poa.to_double();
  j["exact"] = exact;
  j["ne_count"] = ne_count;
  j["all_trees"] = all_trees;
  if (bound) {
    j["bound"] = {{"value", bound->value.to_short_string()},
                  {"strict", bound->strict},
                  {"range", bound->range}};
  } else {
    j["bound"] = nullptr;
  }
  j["within_bound"] = within_bound;
  return j;
}

PoAEstimate poa_exact(int n, const Rational& alpha, int threads) {
  EnumerationConfig ec;
  ec.n = n;
  ec.alpha = alpha;
  ec.threads = threads;
  NashCatalog cat = enumerate_nash(ec);
  PoAEstimate est;
  est.exact = true;
  est.ne_count = cat.entries.size();
  if (cat.entries.empty()) {
    throw InvariantViolation("no equilibrium found at n=" + std::to_string(n) +
                             " alpha=" + alpha.to_short_string());
  }
  est.all_trees = std::all_of(cat.entries.begin(), cat.entries.end(),
                              [](const CatalogEntry& e) { return e.tree; });
  est.opt = optimum_social_cost(n, alpha, std::uint64_t{1} << 21, threads).cost;
  est.worst = cat.entries.front().social.value();
  for (const auto& e : cat.entries) est.worst = std::max(est.worst, e.social.value());
  est.poa = est.opt.is_zero() ? Rational(1) : est.worst / est.opt;
  est.bound = known_poa_bound(n, alpha, est.all_trees);
  est.within_bound = !est.bound || est.bound->admits(est.poa);
  return est;
}

bool SweepReport::falsified() const {
  return std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) {
    return !r.counterexamples.empty();
  });
}

nlohmann::json SweepReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    row["n"] = r.n;
    row["alpha"] = r.alpha.to_short_string();
    row["applicable"] = r.applicable;
    row["ne_count"] = r.ne_count;
    row["trees"] = r.trees;
    row["counterexamples"] = nlohmann::json::array();
    for (const auto& s : r.counterexamples) {
      row["counterexamples"].push_back(to_ncg({r.n, r.alpha}, s));
    }
    j["rows"].push_back(row);
  }
  j["falsified"] = falsified();
  return j;
}

SweepReport tree_conjecture_sweep(const std::vector<int>& ns,
                                  const std::vector<AlphaExpr>& alphas,
                                  int threads) {
  SweepReport report;
  for (int n : ns) {
    for (const auto& expr : alphas) {
      SweepRow row;
      row.n = n;
      row.alpha = expr.at(n);
      row.applicable = row.alpha > Rational(n);
      EnumerationConfig ec;
      ec.n = n;
      ec.alpha = row.alpha;
      ec.threads = threads;
      NashCatalog cat = enumerate_nash(ec);
      row.ne_count = cat.entries.size();
      for (const auto& e : cat.entries) {
        if (e.tree) {
          ++row.trees;
        } else if (row.applicable) {
          row.counterexamples.push_back(e.s);
        }
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::vector<OwnedEdge> canonical_form(const StrategyVector& s) {
  const int n = s.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  auto edges = s.edges();
  std::vector<OwnedEdge> best;
  std::vector<OwnedEdge> cur(edges.size());
  bool first = true;
  do {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      cur[i] = {perm[edges[i].owner], perm[edges[i].target]};
    }
    std::sort(cur.begin(), cur.end());
    if (first || cur < best) {
      best = cur;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

NashCatalog isomorphism_dedup(const NashCatalog& catalog, int max_n) {
  NashCatalog out = catalog;
  if (catalog.cfg.n > max_n) {
    out.deduped = false;
    return out;
  }
  std::map<std::vector<OwnedEdge>, std::size_t> classes;
  out.entries.clear();
  for (const auto& e : catalog.entries) {
    auto key = canonical_form(e.s);
    auto it = classes.find(key);
    if (it == classes.end()) {
      classes.emplace(std::move(key), out.entries.size());
      out.entries.push_back(e);
    } else if (e.s < out.entries[it->second].s) {
      out.entries[it->second] = e;
    }
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.s < b.s; });
  out.deduped = true;
  return out;
}

namespace {

std::string entry_file(std::size_t i) {
  std::ostringstream name;
  name << "ne_";
  name.width(5);
  name.fill('0');
  name << i << ".ncg";
  return name.str();
}

nlohmann::json distance_json(Distance d) {
  if (d == kUnreachable) return "inf";
  return d;
}

}  // namespace

nlohmann::json catalog_index(const NashCatalog& catalog) {
  nlohmann::json j;
  j["schema"] = 1;
  j["n"] = catalog.cfg.n;
  j["alpha"] = catalog.cfg.alpha.to_string();
  j["provenance"] = catalog.provenance;
  j["states"] = catalog.states;
  j["deduped"] = catalog.deduped;
  j["count"] = catalog.entries.size();
  j["entries"] = nlohmann::json::array();
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    const auto& e = catalog.entries[i];
    j["entries"].push_back({{"file", entry_file(i)},
                            {"social", e.social.to_string()},
                            {"edges", e.edges},
                            {"tree", e.tree},
                            {"diameter", distance_json(e.diameter)},
                            {"girth", distance_json(e.girth)},
                            {"nontrivial_components", e.nontrivial_components}});
  }
  return j;
}

void write_catalog(const std::string& dir, const NashCatalog& catalog) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    write_ncg_file((std::filesystem::path(dir) / entry_file(i)).string(),
                   catalog.cfg, catalog.entries[i].s);
  }
  std::ofstream out(std::filesystem::path(dir) / "index.json", std::ios::binary);
  if (!out) throw ValidationError("cannot write catalog index in '" + dir + "'");
  out << catalog_index(catalog).dump(2) << "\n";
}

NashCatalog load_catalog(const std::string& dir) {
  std::ifstream in(std::filesystem::path(dir) / "index.json");
  if (!in) throw ValidationError("no index.json in '" + dir + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad index.json: ") + e.what());
  }
  NashCatalog cat;
  cat.cfg = {j.at("n").get<int>(), Rational::parse(j.at("alpha").get<std::string>())};
  cat.provenance = j.value("provenance", "");
  cat.states = j.value("states", std::uint64_t{0});
  cat.deduped = j.value("deduped", false);
  for (const auto& item : j.at("entries")) {
    std::string file = item.at("file").get<std::string>();
    Instance inst = read_ncg_file((std::filesystem::path(dir) / file).string());
    if (inst.cfg.n != cat.cfg.n || inst.cfg.alpha != cat.cfg.alpha) {
      throw ValidationError(file + ": config differs from index");
    }
    if (!is_nash_fast(inst.cfg, inst.s)) {
      throw ValidationError(file + ": not an equilibrium");
    }
    cat.entries.push_back(summarize(inst.cfg, inst.s));
  }
  return cat;
}

}  // namespace ncg
