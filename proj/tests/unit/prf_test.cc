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

#include "ddhlearn/prf.h"

#include "gtest/gtest.h"

#include "ddhlearn/error.h"
#include "reference.h"

namespace ddhlearn {

namespace {

GroupInstance Toy() { return GroupInstance::Create(7, 2, 4); }

uint64_t Eval(const GroupInstance& inst, uint64_t b, const char* x) {
  return PrfEval(inst, PrfKey(inst, b), BitString::FromString(x)).value().convert_to<uint64_t>();
}

}  // namespace

TEST(Prg, Examples) {
  const GroupInstance inst = Toy();
  const auto pair = [&](uint64_t b) {
    auto [l, r] = PrgEval(inst, ZqElement(b, 3));
    return std::make_pair(l.value().convert_to<uint64_t>(), r.value().convert_to<uint64_t>());
  };
  EXPECT_EQ(pair(1), std::make_pair(uint64_t{2}, uint64_t{3}));
  EXPECT_EQ(pair(2), std::make_pair(uint64_t{3}, uint64_t{2}));
  EXPECT_EQ(pair(3), std::make_pair(uint64_t{1}, uint64_t{1}));
}

TEST(Prf, Examples) {
  const GroupInstance inst = Toy();
  EXPECT_EQ(Eval(inst, 1, "000"), 1u);
  EXPECT_EQ(Eval(inst, 1, "111"), 3u);
  EXPECT_EQ(Eval(inst, 2, "101"), 1u);
}

TEST(Prf, LengthAndKeyChecks) {
  const GroupInstance inst = Toy();
  const PrfKey key(inst, 1);
  EXPECT_THROW(PrfEval(inst, key, BitString::FromString("00")), InvalidArgument);
  EXPECT_THROW(PrfKey(inst, 0), InvalidArgument);
  EXPECT_THROW(PrfKey(inst, 4), InvalidArgument);
  const GroupInstance other = GroupInstance::Create(7, 4, 2);
  EXPECT_THROW(PrfEval(other, key, BitString::FromString("000")), InvalidArgument);
}

TEST(Prf, MatchesReferenceWalk) {
  for (unsigned n = 3; n <= 24; ++n) {
    Rng rng(DeriveSeed(21, "prf", n));
    const GroupInstance inst = GenerateInstance(n, rng);
    const uint64_t p = inst.p().convert_to<uint64_t>();
    const uint64_t g = inst.g().convert_to<uint64_t>();
    const uint64_t ga = inst.g_a().convert_to<uint64_t>();
    for (int i = 0; i < 20; ++i) {
      const PrfKey key = PrfKey::Random(inst, rng);
      const BitString x = BitString::Random(n, rng);
      const ZqElement v = PrfEval(inst, key, x);
      EXPECT_EQ(v.value(), reference::Ggm(p, g, ga, key.value().convert_to<uint64_t>(),
                                          x.ToString()));
      EXPECT_GE(v.value(), 1);
      EXPECT_LE(v.value(), inst.q());
    }
  }
}

TEST(Prf, TreeConsistency) {
  for (unsigned n = 3; n <= 12; ++n) {
    Rng rng(DeriveSeed(22, "tree", n));
    const GroupInstance inst = GenerateInstance(n, rng);
    const PrfKey key = PrfKey::Random(inst, rng);
    const BitString x = BitString::Random(n, rng);
    for (size_t split = 0; split <= n; ++split) {
      const ZqElement mid = GgmWalk(inst, key.element(), x.Slice(0, split));
      const ZqElement leaf = GgmWalk(inst, mid, x.Slice(split, n - split));
      EXPECT_EQ(leaf, PrfEval(inst, key, x));
    }
  }
}

TEST(Prf, KeySensitivity) {
  uint64_t distinguished = 0;
  const uint64_t pairs = 200;
  for (uint64_t i = 0; i < pairs; ++i) {
    Rng rng(DeriveSeed(23, "sensitivity", i));
    const GroupInstance inst = GenerateInstance(4 + static_cast<unsigned>(i % 12), rng);
    const PrfKey k1 = PrfKey::Random(inst, rng);
    PrfKey k2 = PrfKey::Random(inst, rng);
    while (k2 == k1) k2 = PrfKey::Random(inst, rng);
    bool differ = false;
    for (int probe = 0; probe < 16 && !differ; ++probe) {
      const BitString x = BitString::Random(inst.n(), rng);
      differ = !(PrfEval(inst, k1, x) == PrfEval(inst, k2, x));
    }
    distinguished += differ ? 1 : 0;
  }
  EXPECT_GT(static_cast<double>(distinguished) / pairs, 0.99);
}

TEST(Prf, Deterministic) {
  Rng rng(9);
  const GroupInstance inst = GenerateInstance(16, rng);
  const PrfKey key = PrfKey::Random(inst, rng);
  const BitString x = BitString::Random(16, rng);
  EXPECT_EQ(PrfEval(inst, key, x), PrfEval(inst, key, x));
}

}  // namespace ddhlearn
