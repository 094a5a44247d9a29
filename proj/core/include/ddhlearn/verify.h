// Copyright 2026 The ddhlearn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ddhlearn/distribution.h"
#include "ddhlearn/rng.h"
#include "ddhlearn/serialize.h"

namespace ddhlearn {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
};

// numtheory, kgen, boollemmas, all.
const std::vector<std::string>& VerifySuiteNames();

// Runs the exhaustive invariant checks of one suite ("all" runs every suite in
// the order above). Throws InvalidArgument on an unknown suite name.
SuiteReport RunVerifySuite(const std::string& suite, uint64_t seed = 0);

Json SuiteReportToJson(const SuiteReport& report);

// ---------------------------------------------------------------------------
// Randomized table constructions used by the checks
// ---------------------------------------------------------------------------

// A random table that puts positive mass on every string of `support` (so the
// divergence from the uniform table on `support` is finite) and mixes
// concentration, dilution and off-support mass in random proportions.
FloatTable CraftNearbyTable(const std::vector<BitString>& support, Rng& rng);

// Number of strings s in `support` with table(s) >= 2^-(2 + epsilon + n),
// where n is half the string length.
uint64_t HeavySupportCount(const FloatTable& table, const std::vector<BitString>& support,
                           double epsilon);

struct HeavySupportSummary {
  unsigned n = 0;
  uint64_t trials = 0;      // crafted tables with divergence below n - 2
  uint64_t attempts = 0;    // including rejected drafts
  uint64_t violations = 0;  // heavy count below 2^n / n
  uint64_t min_heavy = 0;
  double max_divergence = 0.0;
};

// For `trials` crafted tables D with KL(D_(P,k) || D) = epsilon < n - 2 (each
// against a fresh instance and key), counts the heavy support strings at
// threshold 2^-(2 + epsilon + n) and records every case where the count falls
// below 2^n / n.
HeavySupportSummary HeavySupportSearch(unsigned n, uint64_t trials, uint64_t seed);

// Two random tables on `bits`-bit strings with supp(P) inside supp(Q), so
// KL(P || Q) is finite.
std::pair<FloatTable, FloatTable> RandomFiniteKlPair(size_t bits, Rng& rng);

}  // namespace ddhlearn
