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

#include "ncg/format.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "ncg/error.hpp"

namespace ncg {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

int parse_id(std::string_view word, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(),
                                   value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ValidationError("line " + std::to_string(line_no) +
                          ": expected integer, got '" + std::string(word) +
                          "'");
  }
  return value;
}

}  // namespace

std::string to_ncg(const GameConfig& cfg, const StrategyVector& s) {
  std::ostringstream out;
  out << "ncg 1\n";
  out << "n=" << cfg.n << " alpha=" << cfg.alpha.to_string() << "\n";
  for (const auto& e : s.edges()) {
    out << "buy " << e.owner << " " << e.target << "\n";
  }
  return out.str();
}

Instance parse_ncg(std::string_view text) {
  std::vector<std::string_view> content;
  std::vector<int> line_numbers;
  int line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    if (split_words(line).empty()) continue;
    content.push_back(line);
    line_numbers.push_back(line_no);
  }
  if (content.empty()) throw ValidationError("empty input");

  auto magic = split_words(content[0]);
  if (magic.size() != 2 || magic[0] != "ncg") {
    throw ValidationError("line 1: missing 'ncg 1' header");
  }
  if (magic[1] != "1") {
    throw ValidationError("unsupported format version '" +
                          std::string(magic[1]) + "'");
  }
  if (content.size() < 2) throw ValidationError("missing 'n=... alpha=...' line");

  Instance inst;
  bool have_n = false;
  bool have_alpha = false;
  for (auto word : split_words(content[1])) {
    if (word.substr(0, 2) == "n=") {
      inst.cfg.n = parse_id(word.substr(2), line_numbers[1]);
      have_n = true;
    } else if (word.substr(0, 6) == "alpha=") {
      inst.cfg.alpha = Rational::parse(word.substr(6));
      have_alpha = true;
    } else {
      throw ValidationError("line " + std::to_string(line_numbers[1]) +
                            ": unknown field '" + std::string(word) + "'");
    }
  }
  if (!have_n || !have_alpha) {
    throw ValidationError("line " + std::to_string(line_numbers[1]) +
                          ": expected 'n=<int> alpha=<p>/<q>'");
  }
  inst.cfg.validate();

  std::set<OwnedEdge> seen;
  for (std::size_t i = 2; i < content.size(); ++i) {
    auto words = split_words(content[i]);
    if (words.size() != 3 || words[0] != "buy") {
      throw ValidationError("line " + std::to_string(line_numbers[i]) +
                            ": expected 'buy <owner> <target>'");
    }
    OwnedEdge e{parse_id(words[1], line_numbers[i]),
                parse_id(words[2], line_numbers[i])};
    if (e.owner < 0 || e.owner >= inst.cfg.n || e.target < 0 ||
        e.target >= inst.cfg.n) {
      throw ValidationError("line " + std::to_string(line_numbers[i]) +
                            ": player id out of range");
    }
    if (e.owner == e.target) {
      throw ValidationError("line " + std::to_string(line_numbers[i]) +
                            ": self purchase");
    }
    if (!seen.insert(e).second) {
      throw ValidationError("line " + std::to_string(line_numbers[i]) +
                            ": duplicate purchase");
    }
  }
  std::vector<OwnedEdge> edges(seen.begin(), seen.end());
  inst.s = StrategyVector::from_edges(inst.cfg.n, edges);
  return inst;
}

Instance read_ncg_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ncg(buf.str());
}

void write_ncg_file(const std::string& path, const GameConfig& cfg,
                    const StrategyVector& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << to_ncg(cfg, s);
}

}  // namespace ncg
