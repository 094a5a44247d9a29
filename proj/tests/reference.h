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

// Naive reference implementations used as independent oracles in tests. They
// share nothing with the library beyond the plain integer types.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ddhlearn::reference {

inline bool IsPrime(uint64_t v) {
  if (v < 2) return false;
  for (uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

inline bool IsSafePrime(uint64_t p) { return p >= 5 && IsPrime(p) && IsPrime((p - 1) / 2); }

// base^e mod p by repeated multiplication (small p only).
inline uint64_t SlowPow(uint64_t base, uint64_t e, uint64_t p) {
  uint64_t out = 1 % p;
  for (uint64_t i = 0; i < e; ++i) out = out * (base % p) % p;
  return out;
}

// Square-and-multiply with explicit 128-bit products.
inline uint64_t Pow(uint64_t base, uint64_t e, uint64_t p) {
  __extension__ using U128 = unsigned __int128;
  uint64_t out = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) out = static_cast<uint64_t>(static_cast<U128>(out) * base % p);
    base = static_cast<uint64_t>(static_cast<U128>(base) * base % p);
    e >>= 1;
  }
  return out;
}

// Residues by squaring every unit.
inline std::vector<bool> SquaresMod(uint64_t p) {
  std::vector<bool> sq(p, false);
  for (uint64_t x = 1; x < p; ++x) sq[x * x % p] = true;
  return sq;
}

inline uint64_t Fold(uint64_t p, uint64_t x) {
  const uint64_t q = (p - 1) / 2;
  return x <= q ? x : p - x;
}

// The keyed function written straight from its definition: walk the bits of
// x (leftmost first), replacing b by fold(g^b) on 0 and fold(g_a^b) on 1.
inline uint64_t Ggm(uint64_t p, uint64_t g, uint64_t g_a, uint64_t b, const std::string& x) {
  for (char bit : x) b = Fold(p, Pow(bit == '0' ? g : g_a, b, p));
  return b;
}

inline std::string Bin(uint64_t v, unsigned width) {
  std::string out(width, '0');
  for (unsigned i = 0; i < width; ++i) {
    if ((v >> (width - 1 - i)) & 1) out[i] = '1';
  }
  return out;
}

}  // namespace ddhlearn::reference
