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

#include "ddhlearn/numtheory.h"

#include <set>

#include "gtest/gtest.h"

#include "ddhlearn/error.h"
#include "reference.h"

namespace ddhlearn {

TEST(SafePrime, Examples) {
  EXPECT_TRUE(IsSafePrime(7));
  EXPECT_FALSE(IsSafePrime(13));
  EXPECT_TRUE(IsSafePrime(23));
  EXPECT_TRUE(IsSafePrime(5));
  EXPECT_FALSE(IsSafePrime(2));
  EXPECT_FALSE(IsSafePrime(3));
  EXPECT_THROW(IsSafePrime(1), InvalidArgument);
}

TEST(SafePrime, AgreesWithTrialDivision) {
  for (uint64_t v = 2; v < 20000; ++v) {
    ASSERT_EQ(IsProbablePrime(v), reference::IsPrime(v)) << v;
    ASSERT_EQ(IsSafePrime(v), reference::IsSafePrime(v)) << v;
  }
}

TEST(SafePrime, LargeValues) {
  const BigInt m61 = (BigInt(1) << 61) - 1;
  EXPECT_TRUE(IsProbablePrime(m61));
  EXPECT_FALSE(IsProbablePrime(m61 + 2));
  // 2^127 - 1 is prime, (2^127 - 2) / 2 = 2^126 - 1 is divisible by 3.
  const BigInt m127 = (BigInt(1) << 127) - 1;
  EXPECT_TRUE(IsProbablePrime(m127));
  EXPECT_FALSE(IsSafePrime(m127));
  // Carmichael numbers fool Fermat but not Miller-Rabin.
  for (uint64_t c : {561ULL, 1105ULL, 1729ULL, 2465ULL, 6601ULL, 8911ULL}) {
    EXPECT_FALSE(IsProbablePrime(c)) << c;
  }
}

TEST(QuadraticResidue, Examples) {
  EXPECT_TRUE(IsQr(7, 2));
  EXPECT_FALSE(IsQr(7, 3));
  EXPECT_TRUE(IsQr(7, 1));
  EXPECT_TRUE(IsQr(23, 1));
  EXPECT_THROW(IsQr(7, 0), InvalidArgument);
  EXPECT_THROW(IsQr(7, 7), InvalidArgument);
}

TEST(QuadraticResidue, AgreesWithSquaresBelow1024) {
  for (uint64_t p = 5; p < 1024; ++p) {
    if (!reference::IsSafePrime(p)) continue;
    const std::vector<bool> squares = reference::SquaresMod(p);
    for (uint64_t x = 1; x < p; ++x) ASSERT_EQ(IsQr(p, x), squares[x]) << p << " " << x;
  }
}

TEST(ModExp, Examples) {
  EXPECT_EQ(ModExp(7, 2, 3), 1);
  EXPECT_EQ(ModExp(7, 4, 2), 2);
  EXPECT_EQ(ModExp(7, 2, 0), 1);
  for (int g : {2, 4}) EXPECT_EQ(ModExp(7, g, 3), 1);
}

TEST(ModExp, MatchesRepeatedMultiplication) {
  for (uint64_t base = 1; base < 23; ++base) {
    for (uint64_t e = 0; e < 60; ++e) ASSERT_EQ(ModExp(23, base, e), reference::SlowPow(base, e, 23));
  }
}

TEST(Fold, Examples) {
  EXPECT_EQ(QrToZq(7, 4).value(), 3);
  EXPECT_EQ(QrToZq(7, 2).value(), 2);
  EXPECT_EQ(QrToZq(11, 9).value(), 2);
  EXPECT_THROW(QrToZq(7, 3), InvalidArgument);
}

TEST(Fold, InverseExamples) {
  EXPECT_EQ(ZqToQr(7, 3), 4);
  EXPECT_EQ(ZqToQr(7, 2), 2);
  EXPECT_THROW(ZqToQr(7, 0), InvalidArgument);
  EXPECT_THROW(ZqToQr(7, 4), InvalidArgument);
}

TEST(Fold, RoundTripOnEveryResidue) {
  for (uint64_t p : {7ULL, 11ULL, 23ULL, 47ULL, 59ULL, 83ULL, 107ULL}) {
    const std::vector<bool> squares = reference::SquaresMod(p);
    std::set<uint64_t> image;
    for (uint64_t x = 1; x < p; ++x) {
      if (!squares[x]) continue;
      const ZqElement y = QrToZq(p, x);
      EXPECT_EQ(y.value(), reference::Fold(p, x));
      EXPECT_EQ(ZqToQr(p, y.value()), x);
      image.insert(y.value().convert_to<uint64_t>());
    }
    EXPECT_EQ(image.size(), (p - 1) / 2);
  }
}

TEST(Fold, CollapsesAtFive) {
  EXPECT_EQ(QrToZq(5, 1), QrToZq(5, 4));
}

TEST(ZqElement, Range) {
  EXPECT_NO_THROW(ZqElement(1, 3));
  EXPECT_NO_THROW(ZqElement(3, 3));
  EXPECT_THROW(ZqElement(0, 3), InvalidArgument);
  EXPECT_THROW(ZqElement(4, 3), InvalidArgument);
}

TEST(GroupInstance, CreateValidates) {
  EXPECT_NO_THROW(GroupInstance::Create(7, 2, 4, BigInt(2)));
  EXPECT_THROW(GroupInstance::Create(13, 4, 3), InvalidInstance);
  EXPECT_THROW(GroupInstance::Create(9, 4, 7), InvalidInstance);
  EXPECT_THROW(GroupInstance::Create(7, 3, 4), InvalidInstance);
  EXPECT_THROW(GroupInstance::Create(7, 1, 4), InvalidInstance);
  EXPECT_THROW(GroupInstance::Create(7, 2, 1), InvalidInstance);
  EXPECT_THROW(GroupInstance::Create(7, 2, 4, BigInt(1)), InvalidInstance);
  EXPECT_THROW(GroupInstance::Create(7, 2, 4, BigInt(3)), InvalidInstance);
  EXPECT_THROW(GroupInstance::Create(5, 4, 4), InvalidInstance);
}

TEST(GroupInstance, Accessors) {
  const GroupInstance inst = GroupInstance::Create(7, 2, 4, BigInt(2));
  EXPECT_EQ(inst.n(), 3u);
  EXPECT_EQ(inst.q(), 3);
  EXPECT_TRUE(inst.a_secret().has_value());
  const GroupInstance pub = inst.WithoutSecret();
  EXPECT_FALSE(pub.a_secret().has_value());
  EXPECT_TRUE(pub.SameParams(inst));
  EXPECT_EQ(pub.Id(), inst.Id());
  EXPECT_NE(GroupInstance::Create(7, 4, 2).Id(), inst.Id());
}

TEST(GenerateInstance, SmallWidths) {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const BigInt p3 = GenerateInstance(3, rng).p();
    EXPECT_TRUE(p3 == 5 || p3 == 7);
    EXPECT_EQ(GenerateInstance(4, rng).p(), 11);
  }
  Rng rng(0);
  EXPECT_THROW(GenerateInstance(2, rng), InvalidArgument);
}

TEST(GenerateInstance, Invariants) {
  for (unsigned n = 3; n <= 40; ++n) {
    Rng rng(DeriveSeed(11, "gen", n));
    const GroupInstance inst = GenerateInstance(n, rng);
    EXPECT_EQ(inst.n(), n);
    EXPECT_EQ(msb(inst.p()) + 1, n);
    EXPECT_TRUE(IsSafePrime(inst.p()));
    EXPECT_TRUE(IsQr(inst.p(), inst.g()));
    EXPECT_NE(inst.g(), 1);
    ASSERT_TRUE(inst.a_secret().has_value());
    EXPECT_GE(*inst.a_secret(), 1);
    EXPECT_LE(*inst.a_secret(), inst.q() - 1);
    EXPECT_EQ(ModExp(inst.p(), inst.g(), *inst.a_secret()), inst.g_a());
  }
}

TEST(GenerateInstance, Deterministic) {
  Rng a(99);
  Rng b(99);
  EXPECT_EQ(GenerateInstance(24, a), GenerateInstance(24, b));
}

TEST(GenerateInstance, HidesSecretOnRequest) {
  Rng rng(1);
  InstanceOptions options;
  options.keep_secret = false;
  EXPECT_FALSE(GenerateInstance(10, rng, options).a_secret().has_value());
}

TEST(GenerateInstance, CandidateBudget) {
  Rng rng(1);
  InstanceOptions options;
  options.max_candidates = 0;
  EXPECT_THROW(GenerateInstance(16, rng, options), ResourceError);
}

TEST(DiscreteLog, Examples) {
  for (DlogEngine engine : {DlogEngine::kBrute, DlogEngine::kBsgs}) {
    EXPECT_EQ(DiscreteLog(7, 2, 4, engine).value(), 2);
    EXPECT_EQ(DiscreteLog(7, 2, 1, engine).value(), 3);
    EXPECT_EQ(DiscreteLog(7, 4, 2, engine).value(), 2);
    EXPECT_THROW(DiscreteLog(7, 2, 3, engine), InvalidArgument);
    EXPECT_THROW(DiscreteLog(7, 1, 2, engine), InvalidArgument);
  }
}

TEST(DiscreteLog, EnginesAgreeExhaustively) {
  for (uint64_t p = 7; p < 600; ++p) {
    if (!reference::IsSafePrime(p)) continue;
    const DiscreteLogSolver brute(p, 4, DlogEngine::kBrute);
    const DiscreteLogSolver bsgs(p, 4, DlogEngine::kBsgs);
    for (uint64_t e = 1; e <= (p - 1) / 2; ++e) {
      const uint64_t y = reference::Pow(4, e, p);
      ASSERT_EQ(brute.Solve(y).value(), e);
      ASSERT_EQ(bsgs.Solve(y).value(), e);
    }
  }
}

TEST(DiscreteLog, RoundTripUpTo32Bits) {
  for (unsigned n = 3; n <= 32; ++n) {
    Rng rng(DeriveSeed(5, "dlog", n));
    const GroupInstance inst = GenerateInstance(n, rng);
    const DiscreteLogSolver bsgs(inst, inst.g(), DlogEngine::kBsgs);
    const DiscreteLogSolver brute(inst, inst.g(), DlogEngine::kBrute);
    std::vector<BigInt> exponents = {1, 2, 3, inst.q() - 1, inst.q()};
    for (int i = 0; i < 20; ++i) exponents.push_back(rng.UniformRange(BigInt(1), inst.q()));
    for (const BigInt& e : exponents) {
      const BigInt y = ModExp(inst.p(), inst.g(), e);
      EXPECT_EQ(bsgs.Solve(y).value(), e);
      // The linear scan is O(e); keep its exponents small at the top widths.
      if (n <= 20 || e <= 3) EXPECT_EQ(brute.Solve(y).value(), e);
    }
  }
}

TEST(DiscreteLog, ResourceCap) {
  Rng rng(3);
  const GroupInstance inst = GenerateInstance(20, rng);
  EXPECT_THROW(DiscreteLogSolver(inst, inst.g(), DlogEngine::kBsgs, 16), ResourceError);
  Rng big_rng(4);
  const GroupInstance big = GenerateInstance(64, big_rng);
  EXPECT_THROW(DiscreteLogSolver(big, big.g(), DlogEngine::kBsgs, 200), ResourceError);
}

TEST(DlogEngine, Names) {
  EXPECT_EQ(ParseDlogEngine("brute"), DlogEngine::kBrute);
  EXPECT_EQ(ParseDlogEngine("bsgs"), DlogEngine::kBsgs);
  EXPECT_STREQ(DlogEngineName(DlogEngine::kBsgs), "bsgs");
  EXPECT_THROW(ParseDlogEngine("index-calculus"), InvalidArgument);
}

}  // namespace ddhlearn
