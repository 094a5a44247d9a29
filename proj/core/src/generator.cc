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

#include "ddhlearn/generator.h"

#include <map>

#include "ddhlearn/error.h"

namespace ddhlearn {

const char* GeneratorKindName(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kKgen:
      return "kgen";
    case GeneratorKind::kGen:
      return "gen";
    case GeneratorKind::kBoolFn:
      return "boolfn";
    case GeneratorKind::kPadded:
      return "padded";
    case GeneratorKind::kPermuted:
      return "permuted";
    case GeneratorKind::kCustom:
      return "custom";
  }
  return "custom";
}

GeneratorSpec::GeneratorSpec(size_t seed_bits, size_t out_bits, GeneratorKind kind,
                             std::string description, EvalFn eval)
    : seed_bits_(seed_bits),
      out_bits_(out_bits),
      kind_(kind),
      description_(std::move(description)),
      eval_(std::move(eval)) {
  DDHLEARN_ENFORCE(static_cast<bool>(eval_), InvalidArgument, "generator without a map");
}

BitString GeneratorSpec::operator()(const BitString& seed) const {
  DDHLEARN_ENFORCE(seed.size() == seed_bits_, InvalidArgument,
                   "generator seed has " + std::to_string(seed.size()) + " bits, expected " +
                       std::to_string(seed_bits_));
  BitString out = eval_(seed);
  DDHLEARN_ENFORCE(out.size() == out_bits_, Error,
                   "generator '" + description_ + "' produced " + std::to_string(out.size()) +
                       " bits, declared " + std::to_string(out_bits_));
  return out;
}

namespace {

std::map<BitString, uint64_t> CountOutputs(const GeneratorSpec& gen, size_t limit,
                                           const char* mode) {
  DDHLEARN_ENFORCE(gen.seed_bits() <= limit, ResourceError,
                   std::string(mode) + " tabulation limited to " + std::to_string(limit) +
                       " seed bits, generator has " + std::to_string(gen.seed_bits()));
  std::map<BitString, uint64_t> counts;
  const uint64_t seeds = uint64_t{1} << gen.seed_bits();
  for (uint64_t s = 0; s < seeds; ++s) {
    ++counts[gen(BitString::FromUint(s, gen.seed_bits()))];
  }
  return counts;
}

}  // namespace

ExactTable TabulateExact(const GeneratorSpec& gen) {
  const auto counts = CountOutputs(gen, kMaxExactSeedBits, "rational");
  const Rational denom = Rational(BigInt(1) << gen.seed_bits());
  std::map<BitString, Rational> probs;
  for (const auto& [y, c] : counts) probs.emplace(y, Rational(c) / denom);
  return ExactTable(gen.out_bits(), std::move(probs));
}

FloatTable TabulateFloat(const GeneratorSpec& gen) {
  const auto counts = CountOutputs(gen, kMaxFloatSeedBits, "float");
  const double denom = static_cast<double>(uint64_t{1} << gen.seed_bits());
  std::map<BitString, double> probs;
  for (const auto& [y, c] : counts) probs.emplace(y, static_cast<double>(c) / denom);
  return FloatTable(gen.out_bits(), std::move(probs));
}

BitString SampleFrom(const GeneratorSpec& gen, Rng& rng) {
  return gen(BitString::Random(gen.seed_bits(), rng));
}

BitString EncodeParams(const GroupInstance& inst) {
  const size_t n = inst.n();
  return BinN(inst.p(), n) + BinN(inst.g(), n) + BinN(inst.g_a(), n);
}

GroupInstance DecodeParams(const BitString& bits) {
  DDHLEARN_ENFORCE(!bits.empty() && bits.size() % 3 == 0, ParseError,
                   "parameter encoding length " + std::to_string(bits.size()) +
                       " is not a positive multiple of 3");
  const size_t n = bits.size() / 3;
  GroupInstance inst = GroupInstance::Create(bits.Slice(0, n).ToInt(), bits.Slice(n, n).ToInt(),
                                             bits.Slice(2 * n, n).ToInt());
  DDHLEARN_ENFORCE(inst.n() == n, InvalidInstance,
                   "decoded p = " + inst.p().str() + " is not a " + std::to_string(n) +
                       "-bit prime");
  return inst;
}

BitString KgenEval(const GroupInstance& inst, const PrfKey& key, const BitString& x) {
  // PRF values are at most q < 2^(n-1), so the n-bit encoding never overflows.
  return x + BinN(PrfEval(inst, key, x).value(), inst.n());
}

BitString GenEval(const GroupInstance& inst, const PrfKey& key, const BitString& x) {
  return KgenEval(inst, key, x) + EncodeParams(inst);
}

GeneratorSpec MakeKgenSpec(const GroupInstance& inst, const PrfKey& key) {
  const size_t n = inst.n();
  return GeneratorSpec(n, 2 * n, GeneratorKind::kKgen,
                       "KGEN(p=" + inst.p().str() + ", key=" + key.value().str() + ")",
                       [inst, key](const BitString& x) { return KgenEval(inst, key, x); });
}

GeneratorSpec MakeGenSpec(const GroupInstance& inst, const PrfKey& key) {
  const size_t n = inst.n();
  const BitString suffix = EncodeParams(inst);
  return GeneratorSpec(n, 5 * n, GeneratorKind::kGen,
                       "GEN(p=" + inst.p().str() + ", key=" + key.value().str() + ")",
                       [inst, key, suffix](const BitString& x) {
                         return KgenEval(inst, key, x) + suffix;
                       });
}

}  // namespace ddhlearn
