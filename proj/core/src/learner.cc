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

#include "ddhlearn/learner.h"

#include "ddhlearn/error.h"

namespace ddhlearn {

PrfKey LearnKey(const GroupInstance& inst, const BitString& x, const ZqElement& fx,
                const LearnerOptions& options) {
  DDHLEARN_ENFORCE(x.size() == inst.n(), InvalidArgument,
                   "learner input has " + std::to_string(x.size()) + " bits, instance expects " +
                       std::to_string(inst.n()));
  DDHLEARN_ENFORCE(fx.q() == inst.q(), InvalidArgument,
                   "leaf value belongs to a different modulus");
  const DiscreteLogSolver log_g(inst, inst.g(), options.engine, options.max_bits);
  const DiscreteLogSolver log_ga(inst, inst.g_a(), options.engine, options.max_bits);

  ZqElement node = fx;
  for (size_t j = x.size(); j-- > 0;) {
    const BigInt y = ZqToQr(inst.p(), node.value());
    node = x[j] ? log_ga.Solve(y) : log_g.Solve(y);
  }
  return PrfKey(inst, node.value());
}

LearnedGenerator LearnFromSample(const BitString& sample, const LearnerOptions& options) {
  DDHLEARN_ENFORCE(!sample.empty() && sample.size() % 5 == 0, ParseError,
                   "malformed sample: length " + std::to_string(sample.size()) +
                       " is not a positive multiple of 5");
  const size_t n = sample.size() / 5;
  GroupInstance inst = DecodeParams(sample.Slice(2 * n, 3 * n));
  const BitString x = sample.Slice(0, n);
  const BigInt value = sample.Slice(n, n).ToInt();
  DDHLEARN_ENFORCE(value >= 1 && value <= inst.q(), ParseError,
                   "malformed sample: PRF field " + value.str() + " outside {1.." +
                       inst.q().str() + "}");
  PrfKey key = LearnKey(inst, x, ZqElement(value, inst.q()), options);
  GeneratorSpec generator = MakeGenSpec(inst, key);
  return {std::move(inst), std::move(key), std::move(generator)};
}

PacLearnResult PacGeneratorLearn(SampleOracle& oracle, double /*epsilon*/, double /*delta*/,
                                 const LearnerOptions& options) {
  const uint64_t before = oracle.count();
  LearnedGenerator learned = LearnFromSample(oracle.Sample(), options);
  return {std::move(learned), oracle.count() - before};
}

}  // namespace ddhlearn
