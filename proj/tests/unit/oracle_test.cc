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

#include "ddhlearn/oracle.h"

#include <cmath>
#include <map>

#include "gtest/gtest.h"

#include "ddhlearn/error.h"

namespace ddhlearn {

TEST(MembershipOracle, AnswersWithThePrf) {
  const GroupInstance inst = GroupInstance::Create(7, 2, 4);
  PrfFunction fn(inst, PrfKey(inst, 1));
  MembershipOracle mq(fn);
  EXPECT_EQ(mq.Query(BitString::FromString("111")).value(), 3);
  EXPECT_EQ(mq.Query(BitString::FromString("000")).value(), 1);
  EXPECT_EQ(mq.count(), 2u);
  EXPECT_THROW(mq.Query(BitString::FromString("11")), InvalidArgument);
}

TEST(MembershipOracle, CountsQueries) {
  LazyRandomFunction fn(8, 113, Rng(1));
  MembershipOracle mq(fn);
  Rng rng(2);
  for (int k = 1; k <= 25; ++k) {
    mq.Query(BitString::Random(8, rng));
    EXPECT_EQ(mq.count(), static_cast<uint64_t>(k));
  }
}

TEST(MembershipOracle, Budget) {
  LazyRandomFunction fn(4, 5, Rng(1));
  MembershipOracle mq(fn, 3);
  const BitString x = BitString::FromString("0101");
  for (int i = 0; i < 3; ++i) mq.Query(x);
  EXPECT_THROW(mq.Query(x), QueryBudgetExceeded);
  EXPECT_EQ(mq.count(), 3u);
}

TEST(LazyRandomFunction, Memoizes) {
  LazyRandomFunction fn(16, 1000003, Rng(7));
  MembershipOracle mq(fn);
  const BitString x = BitString::FromUint(1234, 16);
  EXPECT_EQ(mq.Query(x), mq.Query(x));
  EXPECT_EQ(fn.memo_size(), 1u);
}

TEST(LazyRandomFunction, ValuesCoverRange) {
  LazyRandomFunction fn(10, 5, Rng(3));
  std::map<uint64_t, int> counts;
  for (uint64_t x = 0; x < 1024; ++x) {
    const uint64_t v = fn.Eval(BitString::FromUint(x, 10)).value().convert_to<uint64_t>();
    ASSERT_GE(v, 1u);
    ASSERT_LE(v, 5u);
    ++counts[v];
  }
  EXPECT_EQ(counts.size(), 5u);
}

TEST(ExampleOracle, UniformInputs) {
  const GroupInstance inst = GroupInstance::Create(7, 2, 4);
  PrfFunction fn(inst, PrfKey(inst, 2));
  ExampleOracle pex(fn, Rng(11));
  const int draws = 10000;
  std::map<std::string, int> counts;
  for (int i = 0; i < draws; ++i) {
    const LabeledExample ex = pex.Query();
    ASSERT_EQ(ex.value, PrfEval(inst, PrfKey(inst, 2), ex.x));
    ++counts[ex.x.ToString()];
  }
  ASSERT_EQ(counts.size(), 8u);
  const double mean = draws / 8.0;
  const double sigma = std::sqrt(draws * (1.0 / 8) * (7.0 / 8));
  for (const auto& [x, c] : counts) EXPECT_LT(std::abs(c - mean), 4 * sigma) << x;
}

TEST(ExampleOracle, ValueOnlyVariant) {
  const GroupInstance inst = GroupInstance::Create(7, 2, 4);
  PrfFunction fn(inst, PrfKey(inst, 1));
  ExampleOracle a(fn, Rng(5));
  ExampleOracle b(fn, Rng(5));
  for (int i = 0; i < 20; ++i) EXPECT_EQ(a.QueryValueOnly(), b.Query().value);
}

TEST(QueryLog, JsonTranscript) {
  const GroupInstance inst = GroupInstance::Create(7, 2, 4);
  PrfFunction fn(inst, PrfKey(inst, 1));
  MembershipOracle mq(fn);
  mq.Query(BitString::FromString("111"));
  EXPECT_EQ(mq.ToJson().dump(), R"([{"query":"111","response":"3"}])");
}

}  // namespace ddhlearn
