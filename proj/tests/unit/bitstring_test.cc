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

#include "ddhlearn/bitstring.h"

#include "gtest/gtest.h"

#include "ddhlearn/error.h"

namespace ddhlearn {

TEST(BitString, BinExamples) {
  EXPECT_EQ(BinN(3, 3).ToString(), "011");
  EXPECT_EQ(BinN(0, 4).ToString(), "0000");
  EXPECT_THROW(BinN(7, 2), InvalidArgument);
  EXPECT_THROW(BinN(-1, 4), InvalidArgument);
  EXPECT_EQ(BinN(0, 0).size(), 0u);
}

TEST(BitString, BigEndianRoundTrip) {
  const BigInt v = (BigInt(1) << 90) + 12345;
  const BitString s = BinN(v, 100);
  EXPECT_EQ(s.size(), 100u);
  EXPECT_EQ(s.ToInt(), v);
  EXPECT_FALSE(s[0]);
  EXPECT_TRUE(s[9]);
  EXPECT_EQ(BitString::FromUint(5, 3).ToUint(), 5u);
  EXPECT_THROW(s.ToUint(), InvalidArgument);
}

TEST(BitString, Parse) {
  EXPECT_EQ(BitString::FromString("1010").ToUint(), 10u);
  EXPECT_THROW(BitString::FromString("10a0"), ParseError);
  EXPECT_TRUE(BitString::FromString("").empty());
}

TEST(BitString, SliceAndConcat) {
  const BitString a = BitString::FromString("110");
  const BitString b = BitString::FromString("01");
  const BitString c = BitString::FromString("1");
  EXPECT_EQ((a + b).ToString(), "11001");
  EXPECT_EQ(((a + b) + c), (a + (b + c)));
  EXPECT_EQ((a + b).size(), a.size() + b.size());
  EXPECT_EQ((a + b).Slice(2, 2).ToString(), "00");
  EXPECT_THROW(a.Slice(2, 2), InvalidArgument);
  EXPECT_THROW(a.Slice(4, 0), InvalidArgument);
}

TEST(BitString, OrderingIsNumericOnEqualLengths) {
  for (uint64_t x = 0; x < 16; ++x) {
    for (uint64_t y = 0; y < 16; ++y) {
      EXPECT_EQ(BitString::FromUint(x, 4) < BitString::FromUint(y, 4), x < y);
    }
  }
}

TEST(BitString, RandomLength) {
  Rng rng(1);
  EXPECT_EQ(BitString::Random(130, rng).size(), 130u);
}

}  // namespace ddhlearn
