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

#include "ddhlearn/generator.h"
#include "ddhlearn/numtheory.h"
#include "ddhlearn/prf.h"

namespace ddhlearn {

struct LearnerOptions {
  // Classical stand-in for an exact discrete-log oracle.
  DlogEngine engine = DlogEngine::kBsgs;
  // Largest modulus (in bits) the learner accepts. BSGS needs ~2^(n/2)
  // memory, so the default keeps the tables in the megabyte range.
  unsigned max_bits = 40;
};

// Tree reversal: given x and the leaf value F(b, x), walks the GGM path back to
// the root. At level j (from n down to 1) the node value is unfolded into
// QR_p and its discrete log is taken to base g (bit 0) or g_a (bit 1).
//
// Exactly inverts PrfEval: every level is a bijection on {1..q}, so
// LearnKey(inst, x, PrfEval(inst, b, x)) == b for every key b.
// Throws InvalidArgument on a length mismatch or a value from the wrong
// modulus, ResourceError if the instance exceeds options.max_bits.
PrfKey LearnKey(const GroupInstance& inst, const BitString& x, const ZqElement& fx,
                const LearnerOptions& options = {});

// The exact generator recovered by the learner.
struct LearnedGenerator {
  GroupInstance instance;
  PrfKey key;
  GeneratorSpec generator;  // equal to GEN_(instance, key) on every seed
};

// Parses one GEN sample x || BIN_n(F) || BIN_n(p) || BIN_n(g) || BIN_n(g_a)
// and learns the key from it.
//
// Throws ParseError when the length is not a positive multiple of 5 or the
// middle field is outside {1..q}; InvalidInstance when the parameter suffix
// does not decode to a valid instance.
LearnedGenerator LearnFromSample(const BitString& sample, const LearnerOptions& options = {});

struct PacLearnResult {
  LearnedGenerator learned;
  uint64_t samples_used = 0;
};

// The one-sample generator learner: draws exactly one sample from the oracle
// and runs LearnFromSample on it. The output generator is exact (KL = 0).
//
// epsilon and delta are accepted to match the PAC learner interface and are
// ignored: the learner is deterministic and exact, which is stronger than any
// (epsilon, delta) guarantee.
PacLearnResult PacGeneratorLearn(SampleOracle& oracle, double epsilon, double delta,
                                 const LearnerOptions& options = {});

}  // namespace ddhlearn
