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

#include "ddhlearn/bool_dist.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "ddhlearn/error.h"

namespace ddhlearn {

namespace {

constexpr size_t kMaxBoolFnBits = 20;

// Output string x || c(x) packed as an (n+1)-bit integer.
uint64_t SupportPoint(const BoolFn& c, uint64_t x) { return (x << 1) | (c.At(x) ? 1 : 0); }

uint64_t CheckedPow(uint64_t base, uint64_t exp, uint64_t budget) {
  uint64_t out = 1;
  for (uint64_t i = 0; i < exp; ++i) {
    if (out > budget / base) return budget + 1;
    out *= base;
  }
  return out;
}

// Odometer over all functions {0,1}^m -> {0,1}^(n+1), each represented by its
// output vector.
template <typename Visit>
uint64_t ForEachFunction(size_t n, size_t m, uint64_t budget, Visit&& visit) {
  DDHLEARN_ENFORCE(m < 63 && n + 1 < 63, ResourceError, "enumeration dimensions too large");
  const uint64_t seeds = uint64_t{1} << m;
  const uint64_t outputs = uint64_t{1} << (n + 1);
  const uint64_t total = CheckedPow(outputs, seeds, budget);
  DDHLEARN_ENFORCE(total <= budget, ResourceError,
                   "enumerating all generators {0,1}^" + std::to_string(m) + " -> {0,1}^" +
                       std::to_string(n + 1) + " exceeds the budget of " +
                       std::to_string(budget) + " functions");
  std::vector<uint64_t> outs(seeds, 0);
  for (uint64_t k = 0; k < total; ++k) {
    visit(outs);
    for (size_t i = 0; i < seeds; ++i) {
      if (++outs[i] < outputs) break;
      outs[i] = 0;
    }
  }
  return total;
}

// TV(D_gen, D_c) for a generator given by its output vector, scaled to
// integers: sum_y |count_y * 2^n - [y in supp] * 2^m| / 2^(m+n+1).
Rational TvToConcept(const BoolFn& c, size_t m, const std::vector<uint64_t>& outs) {
  const size_t n = c.n();
  std::vector<int64_t> count(size_t{1} << (n + 1), 0);
  for (uint64_t y : outs) ++count[y];
  const int64_t seed_mass = int64_t{1} << m;
  BigInt total = 0;
  for (uint64_t y = 0; y < count.size(); ++y) {
    const uint64_t x = y >> 1;
    const bool in_support = SupportPoint(c, x) == y;
    const int64_t diff = (count[y] << n) - (in_support ? seed_mass : 0);
    total += diff < 0 ? -diff : diff;
  }
  return Rational(total) / Rational(BigInt(1) << (m + n + 1));
}

}  // namespace

BoolFn::BoolFn(size_t n, std::vector<bool> table) : n_(n), table_(std::move(table)) {
  DDHLEARN_ENFORCE(n <= kMaxBoolFnBits, InvalidArgument,
                   "Boolean functions limited to " + std::to_string(kMaxBoolFnBits) + " inputs");
  DDHLEARN_ENFORCE(table_.size() == (size_t{1} << n), InvalidArgument,
                   "truth table must have exactly 2^n entries");
}

BoolFn BoolFn::FromIndex(size_t n, uint64_t index) {
  DDHLEARN_ENFORCE(n <= 6, InvalidArgument, "FromIndex supports n <= 6");
  std::vector<bool> table(size_t{1} << n);
  for (size_t i = 0; i < table.size(); ++i) table[i] = ((index >> i) & 1) != 0;
  return BoolFn(n, std::move(table));
}

BoolFn BoolFn::Random(size_t n, Rng& rng) {
  DDHLEARN_ENFORCE(n <= kMaxBoolFnBits, InvalidArgument, "Boolean function too large");
  return BoolFn(n, BitString::Random(size_t{1} << n, rng).bits());
}

BoolFn BoolFn::FromHex(size_t n, std::string_view hex) {
  DDHLEARN_ENFORCE(n <= kMaxBoolFnBits, InvalidArgument, "Boolean function too large");
  const size_t entries = size_t{1} << n;
  DDHLEARN_ENFORCE(hex.size() == (entries + 3) / 4, ParseError,
                   "truth table hex for n = " + std::to_string(n) + " must have " +
                       std::to_string((entries + 3) / 4) + " digits");
  std::vector<bool> table(entries);
  for (size_t d = 0; d < hex.size(); ++d) {
    const char ch = hex[d];
    int v;
    if (ch >= '0' && ch <= '9') {
      v = ch - '0';
    } else if (ch >= 'a' && ch <= 'f') {
      v = ch - 'a' + 10;
    } else if (ch >= 'A' && ch <= 'F') {
      v = ch - 'A' + 10;
    } else {
      throw ParseError("invalid hex digit '" + std::string(1, ch) + "'");
    }
    for (int b = 0; b < 4; ++b) {
      const size_t idx = d * 4 + static_cast<size_t>(b);
      const bool bit = ((v >> (3 - b)) & 1) != 0;
      if (idx < entries) {
        table[idx] = bit;
      } else {
        DDHLEARN_ENFORCE(!bit, ParseError, "truth table hex has non-zero padding");
      }
    }
  }
  return BoolFn(n, std::move(table));
}

std::string BoolFn::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (size_t d = 0; d * 4 < table_.size(); ++d) {
    int v = 0;
    for (size_t b = 0; b < 4; ++b) {
      const size_t idx = d * 4 + b;
      v = (v << 1) | (idx < table_.size() && table_[idx] ? 1 : 0);
    }
    out.push_back(kDigits[v]);
  }
  return out;
}

bool BoolFn::operator()(const BitString& x) const {
  DDHLEARN_ENFORCE(x.size() == n_, InvalidArgument, "Boolean function input has wrong length");
  return table_[x.ToUint()];
}

BoolFn BoolFn::Complement() const {
  std::vector<bool> table = table_;
  table.flip();
  return BoolFn(n_, std::move(table));
}

Permutation::Permutation(size_t m, std::vector<uint64_t> mapping)
    : m_(m), mapping_(std::move(mapping)) {
  DDHLEARN_ENFORCE(m <= kMaxBoolFnBits, InvalidArgument, "permutation seed space too large");
  DDHLEARN_ENFORCE(mapping_.size() == (size_t{1} << m), InvalidArgument,
                   "permutation table must have 2^m entries");
  std::vector<bool> seen(mapping_.size(), false);
  for (uint64_t v : mapping_) {
    DDHLEARN_ENFORCE(v < mapping_.size() && !seen[v], InvalidArgument,
                     "mapping is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::Identity(size_t m) {
  std::vector<uint64_t> mapping(size_t{1} << m);
  std::iota(mapping.begin(), mapping.end(), uint64_t{0});
  return Permutation(m, std::move(mapping));
}

Permutation Permutation::Random(size_t m, Rng& rng) {
  std::vector<uint64_t> mapping(size_t{1} << m);
  std::iota(mapping.begin(), mapping.end(), uint64_t{0});
  rng.Shuffle(mapping);
  return Permutation(m, std::move(mapping));
}

BitString Permutation::Apply(const BitString& x) const {
  DDHLEARN_ENFORCE(x.size() == m_, InvalidArgument, "permutation input has wrong length");
  return BitString::FromUint(mapping_[x.ToUint()], m_);
}

Permutation Permutation::Then(const Permutation& next) const {
  DDHLEARN_ENFORCE(next.m_ == m_, InvalidArgument, "composing permutations of different sizes");
  std::vector<uint64_t> mapping(mapping_.size());
  for (size_t i = 0; i < mapping.size(); ++i) mapping[i] = next.mapping_[mapping_[i]];
  return Permutation(m_, std::move(mapping));
}

GeneratorSpec GenFromFunction(const BoolFn& f) {
  const size_t n = f.n();
  return GeneratorSpec(n, n + 1, GeneratorKind::kBoolFn, "GEN_D_f(f=" + f.ToHex() + ")",
                       [f](const BitString& x) {
                         return x + BitString(std::vector<bool>{f(x)});
                       });
}

Rational DisagreementProb(const BoolFn& h, const BoolFn& c) {
  DDHLEARN_ENFORCE(h.n() == c.n(), InvalidArgument, "Boolean functions of different arity");
  uint64_t hamming = 0;
  for (size_t i = 0; i < h.table().size(); ++i) hamming += h.At(i) != c.At(i);
  return Rational(hamming) / Rational(BigInt(1) << h.n());
}

GeneratorSpec PaddedGenerator(const BoolFn& c, size_t m) {
  const size_t n = c.n();
  DDHLEARN_ENFORCE(m >= n, InvalidArgument,
                   "padded generator needs m >= n (m = " + std::to_string(m) +
                       ", n = " + std::to_string(n) + ")");
  return GeneratorSpec(m, n + 1, GeneratorKind::kPadded,
                       "padded(c=" + c.ToHex() + ", m=" + std::to_string(m) + ")",
                       [c, n](const BitString& seed) {
                         const BitString x = seed.Slice(0, n);
                         return x + BitString(std::vector<bool>{c(x)});
                       });
}

GeneratorSpec PermutedGenerator(const BoolFn& c, size_t m, const Permutation& perm) {
  DDHLEARN_ENFORCE(perm.m() == m, InvalidArgument,
                   "permutation acts on " + std::to_string(perm.m()) + " bits, seed has " +
                       std::to_string(m));
  GeneratorSpec padded = PaddedGenerator(c, m);
  return GeneratorSpec(m, c.n() + 1, GeneratorKind::kPermuted,
                       "permuted(c=" + c.ToHex() + ", m=" + std::to_string(m) + ")",
                       [padded, perm](const BitString& seed) { return padded(perm.Apply(seed)); });
}

GeneratorSpec OptimalShortGenerator(const BoolFn& c, size_t m) {
  const size_t n = c.n();
  DDHLEARN_ENFORCE(m < n, InvalidArgument,
                   "short generator needs m < n (m = " + std::to_string(m) + ", n = " +
                       std::to_string(n) + ")");
  return GeneratorSpec(m, n + 1, GeneratorKind::kCustom,
                       "optimal-short(c=" + c.ToHex() + ", m=" + std::to_string(m) + ")",
                       [c, n](const BitString& seed) {
                         const uint64_t x = seed.ToUint();
                         return BitString::FromUint(x, n) + BitString(std::vector<bool>{c.At(x)});
                       });
}

ShortGeneratorSearch ExhaustiveMinTv(const BoolFn& c, size_t m, uint64_t budget) {
  ShortGeneratorSearch result;
  bool first = true;
  result.generators = ForEachFunction(c.n(), m, budget, [&](const std::vector<uint64_t>& outs) {
    Rational tv = TvToConcept(c, m, outs);
    if (tv < Rational(1, 2)) ++result.below_half;
    if (first || tv < result.min_tv) {
      result.min_tv = tv;
      first = false;
    }
  });
  return result;
}

ExactGeneratorReport ClassifyExactGenerators(const BoolFn& c, size_t m, uint64_t budget) {
  const size_t n = c.n();
  ExactGeneratorReport report;
  report.n = n;
  report.m = m;
  report.c_hex = c.ToHex();

  std::set<std::vector<uint64_t>> exact;
  report.functions_enumerated =
      ForEachFunction(n, m, budget, [&](const std::vector<uint64_t>& outs) {
        if (TvToConcept(c, m, outs) == 0) exact.insert(outs);
      });
  report.exact_generators = exact.size();

  std::set<std::vector<uint64_t>> padded_permuted;
  if (m >= n) {
    const size_t seeds = size_t{1} << m;
    DDHLEARN_ENFORCE(seeds <= 8, ResourceError,
                     "permutation enumeration limited to seed spaces of size <= 8");
    std::vector<uint64_t> perm(seeds);
    std::iota(perm.begin(), perm.end(), uint64_t{0});
    do {
      ++report.permutations_enumerated;
      std::vector<uint64_t> outs(seeds);
      for (size_t s = 0; s < seeds; ++s) outs[s] = SupportPoint(c, perm[s] >> (m - n));
      padded_permuted.insert(std::move(outs));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  report.distinct_padded_permuted = padded_permuted.size();
  report.sets_equal = exact == padded_permuted;
  return report;
}

}  // namespace ddhlearn
