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

#include "ncg/families.hpp"

#include <random>

#include "ncg/error.hpp"

namespace ncg {
namespace {

void need(bool ok, const char* what) {
  if (!ok) throw ValidationError(what);
}

bool draw(std::mt19937_64& rng, const Rational& prob) {
  // Exact Bernoulli(p) for a rational p in [0, 1].
  auto den = static_cast<std::uint64_t>(prob.den());
  return rng() % den < static_cast<std::uint64_t>(prob.num());
}

}  // namespace

StrategyVector star_strategy(int n) {
  need(n >= 1, "n must be >= 1");
  StrategyVector s(n);
  for (Player v = 1; v < n; ++v) s.add(0, v);
  return s;
}

StrategyVector path_strategy(int n) {
  need(n >= 1, "n must be >= 1");
  StrategyVector s(n);
  for (Player v = 0; v + 1 < n; ++v) s.add(v, v + 1);
  return s;
}

StrategyVector cycle_strategy(int n) {
  need(n >= 3, "a cycle needs n >= 3");
  StrategyVector s(n);
  for (Player v = 0; v < n; ++v) s.add(v, (v + 1) % n);
  return s;
}

StrategyVector complete_strategy(int n) {
  need(n >= 1, "n must be >= 1");
  StrategyVector s(n);
  for (Player a = 0; a < n; ++a) {
    for (Player b = a + 1; b < n; ++b) s.add(a, b);
  }
  return s;
}

StrategyVector theta_strategy(const std::vector<int>& legs, int* n_out) {
  need(legs.size() >= 2, "theta needs at least two legs");
  int short_legs = 0;
  int n = 2;
  for (int len : legs) {
    need(len >= 1, "leg length must be >= 1");
    if (len == 1) ++short_legs;
    n += len - 1;
  }
  need(short_legs <= 1, "at most one leg may be a single link");
  StrategyVector s(n);
  Player next = 2;
  for (int len : legs) {
    Player prev = 0;
    for (int i = 1; i < len; ++i) {
      s.add(prev, next);
      prev = next++;
    }
    s.add(prev, 1);
  }
  if (n_out) *n_out = n;
  return s;
}

StrategyVector random_strategy(int n, const Rational& p, const Rational& coin,
                               std::uint64_t seed) {
  need(n >= 1, "n must be >= 1");
  need(p.sign() >= 0 && p <= Rational(1), "p must lie in [0, 1]");
  need(coin.sign() >= 0 && coin <= Rational(1), "coin must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  StrategyVector s(n);
  for (Player a = 0; a < n; ++a) {
    for (Player b = a + 1; b < n; ++b) {
      if (!draw(rng, p)) continue;
      if (draw(rng, coin)) {
        s.add(a, b);
      } else {
        s.add(b, a);
      }
    }
  }
  return s;
}

}  // namespace ncg
