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
#include <string>

#include "ddhlearn/bitstring.h"
#include "ddhlearn/distribution.h"
#include "ddhlearn/prf.h"

namespace ddhlearn {

enum class GeneratorKind { kKgen, kGen, kBoolFn, kPadded, kPermuted, kCustom };

const char* GeneratorKindName(GeneratorKind kind);

// Executable description of a classical generator {0,1}^m -> {0,1}^out.
// The induced distribution puts mass (#seeds mapping to y) / 2^m on y.
class GeneratorSpec {
 public:
  using EvalFn = std::function<BitString(const BitString&)>;

  GeneratorSpec(size_t seed_bits, size_t out_bits, GeneratorKind kind, std::string description,
                EvalFn eval);

  size_t seed_bits() const { return seed_bits_; }
  size_t out_bits() const { return out_bits_; }
  GeneratorKind kind() const { return kind_; }
  const std::string& description() const { return description_; }

  // Throws InvalidArgument when the seed has the wrong length; throws Error if
  // the wrapped map produces an output of the wrong length.
  BitString operator()(const BitString& seed) const;

 private:
  size_t seed_bits_;
  size_t out_bits_;
  GeneratorKind kind_;
  std::string description_;
  EvalFn eval_;
};

// Seed-space limits for exhaustive tabulation.
inline constexpr size_t kMaxExactSeedBits = 16;
inline constexpr size_t kMaxFloatSeedBits = 20;

// Exact table by enumerating all 2^m seeds. Rational mode requires m <= 16,
// float mode m <= 20; larger seeds throw ResourceError.
ExactTable TabulateExact(const GeneratorSpec& gen);
FloatTable TabulateFloat(const GeneratorSpec& gen);

// SAMPLE(D): draws m uniform seed bits and returns the generator's output.
BitString SampleFrom(const GeneratorSpec& gen, Rng& rng);

// SAMPLE oracle handle that counts its queries.
class SampleOracle {
 public:
  SampleOracle(GeneratorSpec gen, Rng rng) : gen_(std::move(gen)), rng_(std::move(rng)) {}

  BitString Sample() {
    ++count_;
    return SampleFrom(gen_, rng_);
  }
  uint64_t count() const { return count_; }
  const GeneratorSpec& generator() const { return gen_; }

 private:
  GeneratorSpec gen_;
  Rng rng_;
  uint64_t count_ = 0;
};

// ---------------------------------------------------------------------------
// The DDH distribution concept classes
// ---------------------------------------------------------------------------

// BIN_n(p) || BIN_n(g) || BIN_n(g_a): 3n bits.
BitString EncodeParams(const GroupInstance& inst);
// Inverse of EncodeParams. Throws ParseError if the length is not a positive
// multiple of 3, InvalidInstance if the decoded triple fails validation
// (including when p does not have exactly n bits).
GroupInstance DecodeParams(const BitString& bits);

// x || BIN_n(F(key, x)): 2n bits.
BitString KgenEval(const GroupInstance& inst, const PrfKey& key, const BitString& x);
// KgenEval(x) || EncodeParams(inst): 5n bits.
BitString GenEval(const GroupInstance& inst, const PrfKey& key, const BitString& x);

GeneratorSpec MakeKgenSpec(const GroupInstance& inst, const PrfKey& key);
GeneratorSpec MakeGenSpec(const GroupInstance& inst, const PrfKey& key);

}  // namespace ddhlearn
