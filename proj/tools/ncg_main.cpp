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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ncg/asets.hpp"
#include "ncg/equilibrium.hpp"
#include "ncg/error.hpp"
#include "ncg/families.hpp"
#include "ncg/format.hpp"
#include "ncg/report.hpp"
#include "ncg/search.hpp"
#include "ncg/structure.hpp"
#include "ncg/verifiers.hpp"

namespace {

using namespace ncg;

struct Globals {
  std::string input;
  std::string output;
  bool json = false;
  int threads = 1;
  std::uint64_t seed = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Instance load_input(const Globals& g) {
  if (g.input.empty() || g.input == "-") {
    return parse_ncg(read_all(std::cin));
  }
  return read_ncg_file(g.input);
}

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty() || g.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + g.output + "'");
  out << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + item + "'");
    }
  }
  return out;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

// --- gen -------------------------------------------------------------

struct GenArgs {
  std::string family;
  int n = 0;
  std::string alpha = "1";
  std::string legs;
  std::string p = "1/2";
  std::string coin = "1/2";
};

int run_gen(const Globals& g, const GenArgs& a) {
  GameConfig cfg{a.n, Rational::parse(a.alpha)};
  StrategyVector s;
  if (a.family == "star") {
    s = star_strategy(a.n);
  } else if (a.family == "path") {
    s = path_strategy(a.n);
  } else if (a.family == "cycle") {
    s = cycle_strategy(a.n);
  } else if (a.family == "complete") {
    s = complete_strategy(a.n);
  } else if (a.family == "theta") {
    if (a.legs.empty()) throw UsageError("theta needs --legs a,b,c");
    int n = 0;
    s = theta_strategy(parse_ints(a.legs), &n);
    cfg.n = n;
  } else if (a.family == "random") {
    s = random_strategy(a.n, Rational::parse(a.p), Rational::parse(a.coin),
                        g.seed);
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  cfg.validate();
  emit(g, to_ncg(cfg, s));
  return 0;
}

// --- check -----------------------------------------------------------

struct CheckArgs {
  std::string mode = "exact";
};

int run_check(const Globals& g, const CheckArgs& a) {
  Instance inst = load_input(g);
  NashOptions opts;
  if (a.mode == "restricted") {
    opts.mode = NashOptions::Mode::kRestricted;
  } else if (a.mode != "exact") {
    throw UsageError("--mode must be exact or restricted");
  }
  opts.best_response.threads = g.threads;
  NashVerdict v = is_nash(inst.cfg, inst.s, opts);
  OwnedGraph graph = build_graph(inst.cfg, inst.s);
  CostReport c = cost(inst.cfg, graph);
  if (g.json) {
    nlohmann::json j;
    j["schema"] = 1;
    j["mode"] = a.mode;
    j["is_ne"] = v.is_ne;
    j["social_cost"] = c.social.to_string();
    if (v.witness) {
      j["witness"] = to_string(*v.witness);
      j["witness_delta"] = v.witness_delta.to_string();
    } else {
      j["witness"] = nullptr;
    }
    emit(g, dump(j));
  } else {
    std::ostringstream out;
    out << (v.is_ne ? "NE" : "not NE") << " (" << a.mode << ")\n";
    out << "social cost: " << c.social << "\n";
    if (v.witness) {
      out << "witness: " << to_string(*v.witness) << " delta "
          << v.witness_delta << "\n";
    }
    emit(g, out.str());
  }
  return v.is_ne ? 0 : 1;
}

// --- analyze ---------------------------------------------------------

int run_analyze(const Globals& g, bool reemit) {
  Instance inst = load_input(g);
  if (reemit) {
    emit(g, to_ncg(inst.cfg, inst.s));
  } else {
    emit(g, dump(analyze_json(inst.cfg, inst.s)));
  }
  return 0;
}

// --- asets -----------------------------------------------------------

struct AsetsArgs {
  std::string root = "auto";
  std::string covering = "lex2";
};

std::map<Player, std::vector<Player>> load_covering_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read covering file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad covering file: ") + e.what());
  }
  std::map<Player, std::vector<Player>> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out[std::stoi(it.key())] = it.value().get<std::vector<Player>>();
  }
  return out;
}

int run_asets(const Globals& g, const AsetsArgs& a) {
  Instance inst = load_input(g);
  OwnedGraph graph = build_graph(inst.cfg, inst.s);
  CoveringPolicy policy = CoveringPolicy::kLex2;
  std::map<Player, std::vector<Player>> explicit_map;
  if (a.covering == "all") {
    policy = CoveringPolicy::kAll;
  } else if (!a.covering.empty() && a.covering[0] == '@') {
    policy = CoveringPolicy::kExplicit;
    explicit_map = load_covering_file(a.covering.substr(1));
  } else if (a.covering != "lex2") {
    throw UsageError("--covering must be lex2, all or @file");
  }
  nlohmann::json j;
  j["schema"] = 1;
  j["components"] = nlohmann::json::array();
  for (const auto& h : nontrivial_components(graph)) {
    Player root = 0;
    if (a.root == "auto") {
      root = min_usage_node(graph, h);
    } else {
      root = parse_ints(a.root).at(0);
      if (!h.contains(root)) continue;
    }
    TwoEdgeCovering cov = make_covering(graph, h, root, policy, explicit_map);
    DominanceForest f = dominance_forest(graph, h, cov);
    j["components"].push_back(asets_json(graph, h, cov, f));
  }
  emit(g, dump(j));
  return 0;
}

// --- verify ----------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::string catalog;
  std::string k = "1";
  std::string root;
  bool nonstandard = false;
  int verify_max_n = 16;
};

std::string table(const SuiteReport& report) {
  std::ostringstream out;
  out << "ne_verified=" << (report.ne_verified ? "yes" : "no")
      << (report.nonstandard ? " nonstandard" : "") << "\n";
  for (const auto& r : report.results) {
    out << pad(r.id, 16) << pad(std::string(verdict_name(r.verdict)), 22);
    if (!r.witness.empty()) out << r.witness;
    out << "\n";
  }
  return out.str();
}

int run_verify(const Globals& g, const VerifyArgs& a) {
  VerifierConfig vc;
  vc.k = Rational::parse(a.k);
  vc.threads = g.threads;
  vc.verify_max_n = a.verify_max_n;
  if (!a.root.empty()) vc.root_override = parse_ints(a.root).at(0);
  std::vector<std::string> ids;
  if (a.suite != "all") ids = split(a.suite, ',');
  for (const auto& id : ids) find_checker(id);

  if (a.catalog.empty()) {
    Instance inst = load_input(g);
    SuiteReport report = run_suite(inst.cfg, inst.s, vc, ids, a.nonstandard);
    emit(g, g.json ? dump(report.to_json()) : table(report));
    return report.any_violated() ? 1 : 0;
  }

  NashCatalog cat = load_catalog(a.catalog);
  std::vector<SuiteReport> reports(cat.entries.size());
  const int workers = std::max(1, std::min<int>(g.threads, static_cast<int>(reports.size())));
  std::vector<std::thread> pool;
  std::vector<std::string> errors(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        VerifierConfig local = vc;
        local.threads = 1;
        for (std::size_t i = w; i < reports.size(); i += workers) {
          reports[i] = run_suite(cat.cfg, cat.entries[i].s, local, ids, a.nonstandard);
        }
      } catch (const std::exception& e) {
        errors[w] = e.what();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (!e.empty()) throw ValidationError(e);
  }
  bool violated = false;
  nlohmann::json j;
  j["schema"] = 1;
  j["n"] = cat.cfg.n;
  j["alpha"] = cat.cfg.alpha.to_string();
  j["instances"] = nlohmann::json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    violated = violated || reports[i].any_violated();
    j["instances"].push_back({{"index", i}, {"report", reports[i].to_json()}});
    text << "# entry " << i << "\n" << table(reports[i]);
  }
  j["violated"] = violated;
  emit(g, g.json ? dump(j) : text.str());
  return violated ? 1 : 0;
}

// --- enumerate -------------------------------------------------------

struct EnumerateArgs {
  int n = 3;
  std::string alpha = "1";
  std::string mode = "exhaustive";
  bool full_vectors = false;
  bool dedup = false;
  int starts = 32;
  int max_steps = 256;
  std::uint64_t budget = 14348907;
};

int run_enumerate(const Globals& g, const EnumerateArgs& a) {
  EnumerationConfig ec;
  ec.n = a.n;
  ec.alpha = Rational::parse(a.alpha);
  if (a.mode == "dynamics") {
    ec.mode = EnumerationConfig::Mode::kDynamics;
  } else if (a.mode != "exhaustive") {
    throw UsageError("--mode must be exhaustive or dynamics");
  }
  ec.full_vectors = a.full_vectors;
  ec.dedup = a.dedup;
  ec.starts = a.starts;
  ec.max_steps = a.max_steps;
  ec.budget = a.budget;
  ec.seed = g.seed;
  ec.threads = g.threads;
  NashCatalog cat = enumerate_nash(ec);
  if (!g.output.empty() && g.output != "-") {
    write_catalog(g.output, cat);
    Globals quiet = g;
    quiet.output.clear();
    emit(quiet, dump(catalog_index(cat)));
    return 0;
  }
  if (g.json) {
    emit(g, dump(catalog_index(cat)));
  } else {
    std::ostringstream out;
    out << cat.entries.size() << " equilibria (" << cat.provenance << ", "
        << cat.states << " states" << (cat.deduped ? ", deduped" : "") << ")\n";
    for (const auto& e : cat.entries) {
      out << "social=" << e.social << " edges=" << e.edges
          << (e.tree ? " tree" : " non-tree") << " :";
      for (const auto& oe : e.s.edges()) out << " " << oe.owner << ">" << oe.target;
      out << "\n";
    }
    emit(g, out.str());
  }
  return 0;
}

// --- poa / sweep -----------------------------------------------------

int run_poa(const Globals& g, int n, const std::string& alpha) {
  PoAEstimate est = poa_exact(n, Rational::parse(alpha), g.threads);
  if (g.json) {
    nlohmann::json j = est.to_json();
    j["schema"] = 1;
    j["n"] = n;
    j["alpha"] = Rational::parse(alpha).to_string();
    emit(g, dump(j));
  } else {
    std::ostringstream out;
    out << "OPT=" << est.opt.to_short_string()
        << " worst NE=" << est.worst.to_short_string()
        << " PoA=" << est.poa.to_short_string() << " (" << est.ne_count
        << " equilibria" << (est.all_trees ? ", all trees" : "") << ")\n";
    if (est.bound) {
      out << "bound " << (est.bound->strict ? "< " : "<= ")
          << est.bound->value.to_short_string() << " [" << est.bound->range
          << "]: " << (est.within_bound ? "ok" : "EXCEEDED") << "\n";
    }
    emit(g, out.str());
  }
  return est.within_bound ? 0 : 1;
}

int run_sweep(const Globals& g, const std::string& ns, const std::string& alphas) {
  std::vector<AlphaExpr> exprs;
  for (const auto& item : split(alphas, ',')) exprs.push_back(AlphaExpr::parse(item));
  SweepReport report = tree_conjecture_sweep(parse_ints(ns), exprs, g.threads);
  if (g.json) {
    emit(g, dump(report.to_json()));
  } else {
    std::ostringstream out;
    for (const auto& r : report.rows) {
      out << "n=" << r.n << " alpha=" << r.alpha.to_short_string() << " NE="
          << r.ne_count << " trees=" << r.trees
          << (r.applicable ? "" : " (alpha <= n)")
          << (r.counterexamples.empty() ? "" : " COUNTEREXAMPLE") << "\n";
    }
    out << (report.falsified() ? "falsified\n" : "no counterexample\n");
    emit(g, out.str());
  }
  return report.falsified() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ncg: exact tools for the sum network creation game"};
  app.require_subcommand(1);
  Globals g;
  const char* env_threads = std::getenv("NCG_THREADS");
  if (env_threads) {
    try {
      g.threads = std::max(1, std::stoi(env_threads));
    } catch (const std::exception&) {
      std::cerr << "error: NCG_THREADS must be an integer\n";
      return 2;
    }
  }
  app.add_option("--input,-i", g.input, "input .ncg file (- for stdin)");
  app.add_option("--output,-o", g.output, "output file or catalog directory");
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "random seed");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a fixture instance");
  gen_cmd->add_option("family", gen.family, "star|path|cycle|complete|theta|random")->required();
  gen_cmd->add_option("--n", gen.n, "number of players");
  gen_cmd->add_option("--alpha", gen.alpha, "link price");
  gen_cmd->add_option("--legs", gen.legs, "theta leg lengths, e.g. 2,2,3");
  gen_cmd->add_option("--p", gen.p, "random edge probability");
  gen_cmd->add_option("--coin", gen.coin, "probability the smaller id owns");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "test whether an instance is an equilibrium");
  check_cmd->add_option("--mode", check.mode, "exact|restricted");

  bool reemit = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "structural report");
  analyze_cmd->add_flag("--reemit", reemit, "print the canonical instance instead");

  AsetsArgs asets;
  auto* asets_cmd = app.add_subcommand("asets", "A sets and dominance forest");
  asets_cmd->add_option("--root", asets.root, "auto or a player id");
  asets_cmd->add_option("--covering", asets.covering, "lex2|all|@file");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run checkers");
  verify_cmd->add_option("--suite", verify.suite, "all or comma-separated ids");
  verify_cmd->add_option("--catalog", verify.catalog, "catalog directory");
  verify_cmd->add_option("--k", verify.k, "K parameter");
  verify_cmd->add_option("--root", verify.root, "override the reference node");
  verify_cmd->add_option("--verify-max-n", verify.verify_max_n,
                         "largest n certified as equilibrium");
  verify_cmd->add_flag("--nonstandard", verify.nonstandard,
                       "admit inputs not certified as equilibria");

  EnumerateArgs en;
  auto* enum_cmd = app.add_subcommand("enumerate", "list equilibria");
  enum_cmd->add_option("--n", en.n)->required();
  enum_cmd->add_option("--alpha", en.alpha)->required();
  enum_cmd->add_option("--mode", en.mode, "exhaustive|dynamics");
  enum_cmd->add_flag("--full-vectors", en.full_vectors, "walk every strategy vector");
  enum_cmd->add_flag("--dedup", en.dedup, "collapse isomorphic equilibria");
  enum_cmd->add_option("--starts", en.starts);
  enum_cmd->add_option("--max-steps", en.max_steps);
  enum_cmd->add_option("--budget", en.budget);

  int poa_n = 3;
  std::string poa_alpha;
  auto* poa_cmd = app.add_subcommand("poa", "exact price of anarchy");
  poa_cmd->add_option("--n", poa_n)->required();
  poa_cmd->add_option("--alpha", poa_alpha)->required();

  std::string sweep_n = "2,3,4,5";
  std::string sweep_alpha = "n+1/2,n+1,2n";
  auto* sweep_cmd = app.add_subcommand("sweep", "tree test over (n, alpha)");
  sweep_cmd->add_option("--n", sweep_n, "comma-separated n values");
  sweep_cmd->add_option("--alpha", sweep_alpha, "comma-separated alpha expressions");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen_cmd) return run_gen(g, gen);
    if (*check_cmd) return run_check(g, check);
    if (*analyze_cmd) return run_analyze(g, reemit);
    if (*asets_cmd) return run_asets(g, asets);
    if (*verify_cmd) return run_verify(g, verify);
    if (*enum_cmd) return run_enumerate(g, en);
    if (*poa_cmd) return run_poa(g, poa_n, poa_alpha);
    if (*sweep_cmd) return run_sweep(g, sweep_n, sweep_alpha);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GuardError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
