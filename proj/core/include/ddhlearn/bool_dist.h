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
#include <string>
#include <string_view>
#include <vector>

#include "ddhlearn/distribution.h"
#include "ddhlearn/generator.h"

namespace ddhlearn {

// Boolean function {0,1}^n -> {0,1} stored as its 2^n-entry truth table;
// entry i is the value at BIN_n(i).
class BoolFn {
 public:
  // Throws InvalidArgument unless table.size() == 2^n (n <= 20).
  BoolFn(size_t n, std::vector<bool> table);

  // Truth table read from the low 2^n bits of `index` (entry i = bit i).
  // Used to enumerate every function for small n.
  static BoolFn FromIndex(size_t n, uint64_t index);
  static BoolFn Random(size_t n, Rng& rng);
  // Hex of the truth table packed big-endian (entry 0 is the top bit of the
  // first digit), zero-padded to a whole digit.
  static BoolFn FromHex(size_t n, std::string_view hex);
  std::string ToHex() const;

  size_t n() const { return n_; }
  const std::vector<bool>& table() const { return table_; }
  bool At(uint64_t x) const { return table_[x]; }
  bool operator()(const BitString& x) const;
  BoolFn Complement() const;

  friend bool operator==(const BoolFn&, const BoolFn&) = default;

 private:
  size_t n_;
  std::vector<bool> table_;
};

// Bijection on {0,1}^m, stored as a table over seed indices.
class Permutation {
 public:
  // Throws InvalidArgument unless mapping is a bijection on [0, 2^m).
  Permutation(size_t m, std::vector<uint64_t> mapping);

  static Permutation Identity(size_t m);
  static Permutation Random(size_t m, Rng& rng);

  size_t m() const { return m_; }
  uint64_t operator()(uint64_t x) const { return mapping_[x]; }
  BitString Apply(const BitString& x) const;
  // x -> next(this(x)).
  Permutation Then(const Permutation& next) const;
  const std::vector<uint64_t>& mapping() const { return mapping_; }

 private:
  size_t m_;
  std::vector<uint64_t> mapping_;
};

// GEN_{D_f}(x) = x || f(x); m = n, n+1 output bits.
GeneratorSpec GenFromFunction(const BoolFn& f);

// Pr_{x <- U_n}[h(x) != c(x)], exactly. Throws InvalidArgument on size
// mismatch.
Rational DisagreementProb(const BoolFn& h, const BoolFn& c);

// GEN_{D_c} applied to the n-bit prefix of an m-bit seed. Throws
// InvalidArgument if m < n.
GeneratorSpec PaddedGenerator(const BoolFn& c, size_t m);

// PaddedGenerator(c, m) composed with a seed permutation. Throws
// InvalidArgument if m < n or P acts on a different seed length.
GeneratorSpec PermutedGenerator(const BoolFn& c, size_t m, const Permutation& perm);

// For m < n: maps seed i to the i-th support string BIN_n(i) || c(i), i.e. the
// lexicographically first 2^m strings of the support. Its TV distance to D_c
// is exactly 1 - 2^(m-n). Throws InvalidArgument if m >= n.
GeneratorSpec OptimalShortGenerator(const BoolFn& c, size_t m);

// Default cap on the number of functions {0,1}^m -> {0,1}^(n+1) enumerated by
// the exhaustive routines below.
inline constexpr uint64_t kDefaultEnumerationBudget = uint64_t{1} << 20;

struct ShortGeneratorSearch {
  uint64_t generators = 0;   // functions enumerated
  Rational min_tv;           // smallest TV(D_gen, D_c) found
  uint64_t below_half = 0;   // generators with TV < 1/2
};

// Minimizes TV to D_c over every generator {0,1}^m -> {0,1}^(n+1).
ShortGeneratorSearch ExhaustiveMinTv(const BoolFn& c, size_t m,
                                     uint64_t budget = kDefaultEnumerationBudget);

struct ExactGeneratorReport {
  size_t n = 0;
  size_t m = 0;
  std::string c_hex;
  uint64_t functions_enumerated = 0;
  uint64_t exact_generators = 0;         // distinct functions whose table is D_c
  uint64_t permutations_enumerated = 0;  // all P on {0,1}^m (0 when m < n)
  uint64_t distinct_padded_permuted = 0; // distinct functions padded o P
  bool sets_equal = false;
};

// Enumerates every function {0,1}^m -> {0,1}^(n+1), keeps those whose induced
// distribution equals D_c, and compares that set with { padded o P }. Throws
// ResourceError when the function count exceeds `budget` or 2^m > 8 (the
// permutation enumeration would exceed 8!).
ExactGeneratorReport ClassifyExactGenerators(const BoolFn& c, size_t m,
                                             uint64_t budget = kDefaultEnumerationBudget);

}  // namespace ddhlearn
