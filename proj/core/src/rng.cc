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

#include "ddhlearn/rng.h"

#include "ddhlearn/error.h"

namespace ddhlearn {

namespace {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

unsigned BitLength(const BigInt& v) {
  return v == 0 ? 0 : static_cast<unsigned>(msb(v)) + 1;
}

}  // namespace

uint64_t Rng::UniformBelow(uint64_t bound) {
  DDHLEARN_ENFORCE(bound > 0, InvalidArgument, "UniformBelow: bound must be positive");
  if ((bound & (bound - 1)) == 0) {
    return engine_() & (bound - 1);
  }
  // Reject the tail that would bias the modulo.
  const uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

uint64_t Rng::UniformRange(uint64_t lo, uint64_t hi) {
  DDHLEARN_ENFORCE(lo <= hi, InvalidArgument, "UniformRange: empty range");
  if (lo == 0 && hi == UINT64_MAX) return engine_();
  return lo + UniformBelow(hi - lo + 1);
}

BigInt Rng::RandomBits(unsigned bits) {
  BigInt out = 0;
  unsigned remaining = bits;
  while (remaining >= 64) {
    out = (out << 64) | BigInt(engine_());
    remaining -= 64;
  }
  if (remaining > 0) {
    out = (out << remaining) | BigInt(engine_() >> (64 - remaining));
  }
  return out;
}

BigInt Rng::UniformBelow(const BigInt& bound) {
  DDHLEARN_ENFORCE(bound > 0, InvalidArgument, "UniformBelow: bound must be positive");
  if (bound <= UINT64_MAX) {
    return BigInt(UniformBelow(bound.convert_to<uint64_t>()));
  }
  const unsigned bits = BitLength(bound - 1);
  BigInt x;
  do {
    x = RandomBits(bits);
  } while (x >= bound);
  return x;
}

BigInt Rng::UniformRange(const BigInt& lo, const BigInt& hi) {
  DDHLEARN_ENFORCE(lo <= hi, InvalidArgument, "UniformRange: empty range");
  return lo + UniformBelow(BigInt(hi - lo + 1));
}

uint64_t DeriveSeed(uint64_t master, std::string_view label, uint64_t index) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  uint64_t s = SplitMix64(master ^ h);
  return SplitMix64(s ^ SplitMix64(index));
}

}  // namespace ddhlearn
