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

#include "ddhlearn/games.h"

#include <cmath>

#include "gtest/gtest.h"

#include "ddhlearn/error.h"

namespace ddhlearn {

namespace {

DistinguisherGameOptions GameOptions(OracleFlavor flavor, uint64_t trials = 200) {
  DistinguisherGameOptions options;
  options.flavor = flavor;
  options.n = 8;
  options.trials = trials;
  options.seed = 71;
  return options;
}

InferenceGameOptions InferOptions(uint64_t trials = 200) {
  InferenceGameOptions options;
  options.n = 8;
  options.trials = trials;
  options.seed = 72;
  return options;
}

}  // namespace

TEST(GameHelpers, Values) {
  EXPECT_EQ(DefaultQueryBudget(8), 640u);
  EXPECT_DOUBLE_EQ(HoeffdingHalfWidth(400), std::sqrt(std::log(200.0) / 800.0));
  EXPECT_EQ(HoeffdingHalfWidth(0), 1.0);
  EXPECT_DOUBLE_EQ(InferenceBound(8), 0.5 + 1.0 / 704.0);
  EXPECT_EQ(ParseOracleFlavor("pex"), OracleFlavor::kPex);
  EXPECT_STREQ(OracleFlavorName(OracleFlavor::kMq), "mq");
  EXPECT_THROW(ParseOracleFlavor("rpex"), InvalidArgument);
}

TEST(GameOracle, FlavorIsEnforced) {
  LazyRandomFunction fn(4, 5, Rng(1));
  GameOracle mq(OracleFlavor::kMq, fn, Rng(2), std::nullopt);
  EXPECT_NO_THROW(mq.Query(BitString::FromString("0101")));
  EXPECT_THROW(mq.Example(), ProtocolViolation);
  GameOracle pex(OracleFlavor::kPex, fn, Rng(2), 1);
  EXPECT_NO_THROW(pex.Example());
  EXPECT_THROW(pex.Query(BitString::FromString("0101")), ProtocolViolation);
  EXPECT_THROW(pex.Example(), QueryBudgetExceeded);
  EXPECT_EQ(pex.queries(), 1u);
}

TEST(DistinguisherGame, KeyLearnerWins) {
  for (OracleFlavor flavor : {OracleFlavor::kMq, OracleFlavor::kPex}) {
    auto adv = MakeKeyLearnerDistinguisher();
    const AdvantageEstimate est = RunDistinguisherGame(*adv, GameOptions(flavor));
    EXPECT_GE(est.advantage, 0.9) << OracleFlavorName(flavor);
    EXPECT_EQ(est.real_trials, 100u);
    EXPECT_EQ(est.random_trials, 100u);
    EXPECT_EQ(est.invalid_trials, 0u);
    EXPECT_DOUBLE_EQ(est.p_real, 1.0);
    EXPECT_DOUBLE_EQ(est.ci_halfwidth, 2 * HoeffdingHalfWidth(200));
  }
}

TEST(DistinguisherGame, TrivialAdversariesHaveNoAdvantage) {
  auto constant = MakeConstantDistinguisher(true);
  const AdvantageEstimate c = RunDistinguisherGame(*constant, GameOptions(OracleFlavor::kMq));
  EXPECT_EQ(c.advantage, 0.0);
  auto coin = MakeCoinFlipDistinguisher();
  const AdvantageEstimate f = RunDistinguisherGame(*coin, GameOptions(OracleFlavor::kPex, 400));
  EXPECT_LE(std::abs(f.advantage), f.ci_halfwidth);
}

TEST(DistinguisherGame, OddTrialSplit) {
  auto adv = MakeConstantDistinguisher(false);
  const AdvantageEstimate est = RunDistinguisherGame(*adv, GameOptions(OracleFlavor::kMq, 7));
  EXPECT_EQ(est.real_trials, 4u);
  EXPECT_EQ(est.random_trials, 3u);
}

TEST(DistinguisherGame, BudgetVoidsTrials) {
  auto adv = MakeKeyLearnerDistinguisher();
  DistinguisherGameOptions options = GameOptions(OracleFlavor::kMq, 20);
  options.query_budget = 1;
  const AdvantageEstimate est = RunDistinguisherGame(*adv, options);
  EXPECT_EQ(est.invalid_trials, 20u);
  EXPECT_EQ(est.real_trials + est.random_trials, 0u);
}

TEST(DistinguisherGame, Deterministic) {
  auto adv = MakeCoinFlipDistinguisher();
  const AdvantageEstimate a = RunDistinguisherGame(*adv, GameOptions(OracleFlavor::kMq, 100));
  const AdvantageEstimate b = RunDistinguisherGame(*adv, GameOptions(OracleFlavor::kMq, 100));
  EXPECT_EQ(a.p_real, b.p_real);
  EXPECT_EQ(a.p_random, b.p_random);
}

TEST(InferenceGame, KeyLearnerPasses) {
  const InferenceResult r = RunInferenceGame(KeyLearnerStrategy(), InferOptions());
  EXPECT_GE(r.pass_rate, 0.95);
  EXPECT_EQ(r.violations, 0u);
  EXPECT_EQ(r.scored_trials, 200u);
}

TEST(InferenceGame, RandomGuesserIsAtChance) {
  const InferenceResult r = RunInferenceGame(RandomGuesserStrategy(), InferOptions(400));
  EXPECT_LE(std::abs(r.pass_rate - 0.5), r.ci_halfwidth);
}

TEST(InferenceGame, ReplayIsAViolation) {
  InferenceGameOptions options = InferOptions(50);
  options.keep_transcripts = 3;
  const InferenceResult r = RunInferenceGame(ReplayStrategy(), options);
  EXPECT_EQ(r.violations, 50u);
  EXPECT_EQ(r.passes, 0u);
  ASSERT_EQ(r.transcripts.size(), 3u);
  EXPECT_TRUE(r.transcripts[0].protocol_violation);
  EXPECT_FALSE(r.transcripts[0].queries.empty());
}

TEST(InferenceGame, TranscriptShape) {
  InferenceGameOptions options = InferOptions(5);
  options.keep_transcripts = 5;
  const InferenceResult r = RunInferenceGame(KeyLearnerStrategy(), options);
  ASSERT_EQ(r.transcripts.size(), 5u);
  for (const InferenceTranscript& t : r.transcripts) {
    EXPECT_EQ(t.exam_string.size(), 8u);
    EXPECT_EQ(t.exam_pair.size(), 2u);
    for (const OracleRecord& q : t.queries) EXPECT_NE(q.query, t.exam_string);
  }
}

TEST(Reduction, ExactLearnerBeatsTheBound) {
  auto stats = std::make_shared<ReductionStats>();
  const InferenceResult r =
      RunInferenceGame(KearnsReduction(MakeExactGeneratorLearner(), {}, stats), InferOptions());
  EXPECT_GE(r.pass_rate, 0.95);
  EXPECT_GT(r.pass_rate, InferenceBound(8));
  EXPECT_EQ(stats->case_a + stats->case_b + stats->case_c, 200u);
  EXPECT_EQ(stats->learner_failures, 0u);
}

TEST(Reduction, UniformLearnerIsAtChance) {
  auto stats = std::make_shared<ReductionStats>();
  const InferenceResult r = RunInferenceGame(
      KearnsReduction(MakeUniformGeneratorLearner(), {}, stats), InferOptions(400));
  EXPECT_LE(std::abs(r.pass_rate - 0.5), r.ci_halfwidth);
}

TEST(Reduction, KgenSamplesDefeatTheExactLearner) {
  auto stats = std::make_shared<ReductionStats>();
  ReductionOptions options;
  options.form = SampleForm::kKgen;
  const InferenceResult r =
      RunInferenceGame(KearnsReduction(MakeExactGeneratorLearner(), options, stats),
                       InferOptions(50));
  EXPECT_EQ(stats->case_c, 50u);
  EXPECT_EQ(stats->learner_failures, 50u);
  EXPECT_EQ(r.violations, 0u);
}

}  // namespace ddhlearn
