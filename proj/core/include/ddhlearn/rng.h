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
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ddhlearn {

using BigInt = boost::multiprecision::cpp_int;

// Seeded randomness handle.
//
// All sampling is built from raw mt19937_64 words with explicit rejection
// sampling, so a given seed yields the same stream on every platform and
// standard library (std::uniform_int_distribution gives no such guarantee).
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform in [0, bound). bound must be > 0.
  uint64_t UniformBelow(uint64_t bound);
  // Uniform in [lo, hi], inclusive.
  uint64_t UniformRange(uint64_t lo, uint64_t hi);
  // Uniform in [0, bound). bound must be > 0.
  BigInt UniformBelow(const BigInt& bound);
  // Uniform in [lo, hi], inclusive.
  BigInt UniformRange(const BigInt& lo, const BigInt& hi);
  // Uniform integer with exactly `bits` random bits, i.e. in [0, 2^bits).
  BigInt RandomBits(unsigned bits);

  bool Coin() { return (engine_() >> 63) != 0; }
  // Uniform real in [0, 1) with 53 bits of resolution.
  double UniformReal() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(UniformBelow(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Derives a sub-seed from (master seed, task label, index).
//
// Fixed hash: FNV-1a 64 over the label bytes, then two SplitMix64 finalizer
// rounds mixing in the master seed and the index. The result is identical
// across platforms, so seeded runs are reproducible bit-for-bit.
uint64_t DeriveSeed(uint64_t master, std::string_view label, uint64_t index);

inline Rng DeriveRng(uint64_t master, std::string_view label, uint64_t index) {
  return Rng(DeriveSeed(master, label, index));
}

}  // namespace ddhlearn
