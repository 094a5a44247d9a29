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
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ddhlearn/generator.h"
#include "ddhlearn/learner.h"
#include "ddhlearn/oracle.h"

namespace ddhlearn {

// Hoeffding half-width for one empirical rate at 99% confidence:
// sqrt(ln(2 / 0.01) / (2 * trials)).
double HoeffdingHalfWidth(uint64_t trials);

// Default per-trial query cap: 10 * n^2.
uint64_t DefaultQueryBudget(unsigned n);

// ---------------------------------------------------------------------------
// Distinguisher game
// ---------------------------------------------------------------------------

enum class OracleFlavor { kMq, kPex };

const char* OracleFlavorName(OracleFlavor flavor);
OracleFlavor ParseOracleFlavor(const std::string& name);

// The oracle handed to a distinguisher: membership queries in the MQ flavor,
// uniform random examples in the PEX flavor. Calling the method of the other
// flavor throws ProtocolViolation.
class GameOracle {
 public:
  GameOracle(OracleFlavor flavor, KeyedFunction& fn, Rng example_rng,
             std::optional<uint64_t> budget);

  OracleFlavor flavor() const { return flavor_; }
  size_t input_bits() const { return fn_.input_bits(); }
  ZqElement Query(const BitString& x);
  LabeledExample Example();
  uint64_t queries() const;

 private:
  OracleFlavor flavor_;
  KeyedFunction& fn_;
  MembershipOracle mq_;
  ExampleOracle pex_;
};

class Distinguisher {
 public:
  virtual ~Distinguisher() = default;
  virtual std::string name() const = 0;
  // Returns the distinguisher's verdict ("this is the keyed function").
  virtual bool Decide(const GroupInstance& inst, GameOracle& oracle, Rng& rng) = 0;
};

// Gets one labelled point, learns the key from it by tree reversal, and
// accepts iff the learned key predicts the function at a second, fresh point.
std::unique_ptr<Distinguisher> MakeKeyLearnerDistinguisher(LearnerOptions options = {});
std::unique_ptr<Distinguisher> MakeConstantDistinguisher(bool verdict = true);
std::unique_ptr<Distinguisher> MakeCoinFlipDistinguisher();

struct AdvantageEstimate {
  std::string game;
  std::string adversary;
  OracleFlavor flavor = OracleFlavor::kMq;
  unsigned n = 0;
  uint64_t seed = 0;
  uint64_t trials = 0;          // requested
  uint64_t real_trials = 0;     // valid trials in the keyed-function arm
  uint64_t random_trials = 0;   // valid trials in the random-function arm
  uint64_t invalid_trials = 0;  // trials voided by the query budget
  double p_real = 0.0;
  double p_random = 0.0;
  double advantage = 0.0;
  double ci_halfwidth = 0.0;    // 2 * HoeffdingHalfWidth(valid trials)
};

struct DistinguisherGameOptions {
  OracleFlavor flavor = OracleFlavor::kMq;
  unsigned n = 8;
  uint64_t trials = 400;
  uint64_t seed = 0;
  // Defaults to DefaultQueryBudget(n).
  std::optional<uint64_t> query_budget;
};

// Splits the trials evenly between the two arms: ceil(trials/2) against
// F_P(k, .) with a uniform key, floor(trials/2) against a lazily sampled random
// function. Trial i of each arm uses the same instance, derived from
// (seed, i), so the arms are coupled and every run is reproducible.
AdvantageEstimate RunDistinguisherGame(Distinguisher& adversary,
                                       const DistinguisherGameOptions& options);

// ---------------------------------------------------------------------------
// Polynomial inference game
// ---------------------------------------------------------------------------

// One inference attempt. The harness creates a fresh strategy per trial.
class InferenceStrategy {
 public:
  virtual ~InferenceStrategy() = default;
  // Query phase: may use the oracle, then names the exam string.
  virtual BitString ChooseExam(const GroupInstance& inst, MembershipOracle& oracle, Rng& rng) = 0;
  // Exam phase, disconnected from the oracle: returns 0 or 1, the index of the
  // value believed to be F(k, exam).
  virtual size_t Answer(const ZqElement& first, const ZqElement& second, Rng& rng) = 0;
  virtual void OnResult(bool /*passed*/) {}
};

using InferenceFactory = std::function<std::unique_ptr<InferenceStrategy>()>;

InferenceFactory RandomGuesserStrategy();
// Queries one point and submits it as the exam string (always a violation).
InferenceFactory ReplayStrategy();
// Learns the key from one query and answers with its prediction.
InferenceFactory KeyLearnerStrategy(LearnerOptions options = {});

struct InferenceTranscript {
  std::vector<OracleRecord> queries;
  BitString exam_string;
  std::vector<BigInt> exam_pair;  // the two values, in presentation order
  size_t true_index = 0;
  size_t guess = 0;
  bool passed = false;
  bool protocol_violation = false;
};

struct InferenceResult {
  std::string game;
  std::string strategy;
  unsigned n = 0;
  uint64_t seed = 0;
  uint64_t trials = 0;          // requested
  uint64_t scored_trials = 0;   // trials - invalid
  uint64_t passes = 0;
  uint64_t violations = 0;      // exam-string reuse; scored as failures
  uint64_t invalid_trials = 0;  // voided by the query budget
  double pass_rate = 0.0;
  double ci_halfwidth = 0.0;    // HoeffdingHalfWidth(scored trials)
  std::vector<InferenceTranscript> transcripts;
};

struct InferenceGameOptions {
  unsigned n = 8;
  uint64_t trials = 400;
  uint64_t seed = 0;
  std::optional<uint64_t> query_budget;  // defaults to DefaultQueryBudget(n)
  size_t keep_transcripts = 0;           // first k transcripts are retained
  std::string strategy_name = "custom";
};

// Per trial: fresh instance and key; the strategy gets P and MQ(F_P(k, .)),
// names an exam string outside its query set, and is shown F(k, exam) and a
// uniform y from {1..q} in random order. If y happens to equal F(k, exam) the
// two values are indistinguishable and the trial is scored by a fair coin.
InferenceResult RunInferenceGame(const InferenceFactory& factory,
                                 const InferenceGameOptions& options);

// ---------------------------------------------------------------------------
// Learner-to-inference reduction
// ---------------------------------------------------------------------------

using SampleSource = std::function<BitString()>;

// A generator learner for the KGEN / GEN distribution classes.
class GeneratorLearner {
 public:
  virtual ~GeneratorLearner() = default;
  virtual std::string name() const = 0;
  // Returns a generator whose output starts with x || BIN_n(y). May throw
  // Error, which the reduction treats as a failed learning run.
  virtual GeneratorSpec Learn(const SampleSource& sample, unsigned n, double epsilon,
                              double delta, Rng& rng) = 0;
};

// PacGeneratorLearn on one sample. Needs GEN-form samples (with the
// parameter suffix); on KGEN-form samples it fails.
std::shared_ptr<GeneratorLearner> MakeExactGeneratorLearner(LearnerOptions options = {});
// Ignores its samples and returns the uniform distribution over 2n bits.
std::shared_ptr<GeneratorLearner> MakeUniformGeneratorLearner();

enum class SampleForm { kKgen, kGen };

struct ReductionOptions {
  double epsilon = 3.0;  // log2(n) at n = 8
  double delta = 0.5;
  SampleForm form = SampleForm::kGen;
};

// Case counters of the reduction, accumulated across trials.
struct ReductionStats {
  uint64_t case_a = 0;         // x fresh, y among the exam values
  uint64_t case_a_passed = 0;  // ... and the exam was passed (case a1)
  uint64_t case_b = 0;         // x fresh, y not among the exam values
  uint64_t case_c = 0;         // x already queried, or the learner failed
  uint64_t learner_failures = 0;
  uint64_t samples_simulated = 0;
};

// Wraps a generator learner into an inference strategy:
//  1. answer each of the learner's SAMPLE requests with x || BIN_n(F(k, x))
//     (plus the parameter encoding in GEN form) for a fresh uniform x queried
//     through MQ, recording the set X of queried strings;
//  2. draw x || y from the learned generator. If x is not in X, submit x and
//     answer with y when it matches an exam value, else guess uniformly. If x
//     is in X, submit any string outside X and guess uniformly.
InferenceFactory KearnsReduction(std::shared_ptr<GeneratorLearner> learner,
                                 ReductionOptions options,
                                 std::shared_ptr<ReductionStats> stats = nullptr);

// 1/2 + 1/(11 n^2): the pass-rate lower bound from the hardness argument,
// stated for sufficiently large n. Reported, not enforced.
double InferenceBound(unsigned n);

}  // namespace ddhlearn
