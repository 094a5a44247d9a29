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

#include "ddhlearn/serialize.h"

#include "gtest/gtest.h"

#include "ddhlearn/error.h"

namespace ddhlearn {

TEST(InstanceJson, RoundTrip) {
  Rng rng(81);
  const GroupInstance inst = GenerateInstance(20, rng);
  const Json j = InstanceToJson(inst);
  EXPECT_EQ(j["n"], "20");
  EXPECT_EQ(j["p"], inst.p().str());
  EXPECT_TRUE(InstanceFromJson(nlohmann::json::parse(j.dump())).SameParams(inst));
}

TEST(InstanceJson, Rejects) {
  EXPECT_THROW(InstanceFromJson(ParseJson(R"({"n":3,"p":"7"})")), ParseError);
  EXPECT_THROW(InstanceFromJson(ParseJson(R"({"n":3,"p":"7","q":"4","g":"2","g_a":"4"})")),
               Error);
  EXPECT_THROW(InstanceFromJson(ParseJson(R"({"n":3,"p":"9","q":"4","g":"4","g_a":"2"})")),
               InvalidInstance);
  EXPECT_THROW(InstanceFromJson(ParseJson(R"({"n":3,"p":"x7","q":"3","g":"2","g_a":"4"})")),
               ParseError);
  EXPECT_THROW(ParseJson("{"), ParseError);
}

TEST(LearnedGeneratorJson, Key) {
  const GroupInstance inst = GroupInstance::Create(7, 2, 4);
  const Json j = LearnedGeneratorToJson(inst, PrfKey(inst, 2));
  EXPECT_EQ(KeyFromJson(nlohmann::json::parse(j.dump())), 2);
  EXPECT_FALSE(j.contains("a_secret"));
}

TEST(Samples, FormatAndParse) {
  const std::vector<BitString> samples = {BitString::FromString("0101"),
                                          BitString::FromString("1100")};
  const std::string text = FormatSamples(samples);
  EXPECT_EQ(text, "0101\n1100\n");
  EXPECT_EQ(ParseSamples(text), samples);
  EXPECT_EQ(ParseSamples("0101\r\n\n1100"), samples);
  EXPECT_TRUE(ParseSamples("").empty());
  EXPECT_THROW(ParseSamples("0101\n110\n"), ParseError);
  EXPECT_THROW(ParseSamples("01x1\n"), ParseError);
}

TEST(Rational, Decimal) {
  EXPECT_EQ(RationalToDecimal(Rational(1, 8)), "0.125");
  EXPECT_EQ(RationalToDecimal(Rational(3, 1)), "3");
  EXPECT_EQ(RationalToDecimal(Rational(0)), "0");
  EXPECT_EQ(RationalToDecimal(Rational(1, 3)), "1/3");
  EXPECT_EQ(RationalToDecimal(Rational(-3, 20)), "-0.15");
  for (const Rational r : {Rational(1, 8), Rational(1, 3), Rational(-3, 20), Rational(7)}) {
    EXPECT_EQ(RationalFromString(RationalToDecimal(r)), r);
  }
  EXPECT_THROW(RationalFromString("1/0"), ParseError);
  EXPECT_THROW(RationalFromString("abc"), ParseError);
}

TEST(TableJson, RoundTrip) {
  const ExactTable t(2, {{BitString::FromString("00"), Rational(1, 3)},
                         {BitString::FromString("11"), Rational(2, 3)}});
  const Json j = TableToJson(t);
  EXPECT_EQ(j["n_bits"], 2);
  EXPECT_EQ(j["probs"]["00"], "1/3");
  const ExactTable back = ExactTableFromJson(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(TvDistance(t, back), 0);
}

TEST(ResultJson, Fields) {
  AdvantageEstimate est;
  est.game = "distinguish";
  est.adversary = "constant";
  est.n = 8;
  est.trials = 10;
  const Json a = AdvantageToJson(est);
  for (const char* key : {"game", "n", "trials", "p_real", "p_random", "advantage", "ci", "seed"}) {
    EXPECT_TRUE(a.contains(key)) << key;
  }
  InferenceResult r;
  r.game = "infer";
  r.n = 8;
  r.trials = 4;
  r.scored_trials = 4;
  r.passes = 3;
  r.pass_rate = 0.75;
  const Json i = InferenceToJson(r, ReductionStats{});
  EXPECT_DOUBLE_EQ(i["advantage"].get<double>(), 0.25);
  EXPECT_TRUE(i["exceeds_bound"].get<bool>());
  EXPECT_TRUE(i.contains("cases"));
}

}  // namespace ddhlearn
