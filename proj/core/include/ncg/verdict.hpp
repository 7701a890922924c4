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

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace ncg {

enum class Verdict { kHolds, kViolated, kPreconditionNotMet };

std::string_view verdict_name(Verdict v);

// Outcome of one machine check. `details` carries the evaluated
// preconditions and the numbers behind the verdict; `witness` is a
// one-line, replayable description of a violating locus.
struct CheckResult {
  std::string id;
  std::string claim;
  Verdict verdict = Verdict::kPreconditionNotMet;
  std::string witness;
  nlohmann::json details = nlohmann::json::object();
  bool nonstandard = false;

  nlohmann::json to_json() const;
};

// How a checker treats the equilibrium precondition. With `nonstandard`
// set, an unverified input is admitted anyway and the result is flagged.
struct Gate {
  bool ne_verified = false;
  bool nonstandard = false;

  bool admits() const { return ne_verified || nonstandard; }
};

}  // namespace ncg
