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
#include <optional>
#include <string>
#include <unordered_map>

#include "ddhlearn/rng.h"

namespace ddhlearn {

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

// Trial division by every prime below 2^16, then 64 Miller-Rabin rounds.
// Inputs below 2^32 are decided deterministically by the trial division. The
// Miller-Rabin witnesses come from a fixed-seed stream, so the function is
// pure: the same input always yields the same answer.
bool IsProbablePrime(const BigInt& n);

// True iff p and (p-1)/2 are both prime. Requires p >= 2.
bool IsSafePrime(const BigInt& p);

// ---------------------------------------------------------------------------
// Modular arithmetic in QR_p
// ---------------------------------------------------------------------------

// base^e mod p by left-to-right square-and-multiply. Not constant time.
// Requires p >= 2, 1 <= base <= p-1, e >= 0.
BigInt ModExp(const BigInt& p, const BigInt& base, const BigInt& e);

// Euler's criterion: x^((p-1)/2) == 1 mod p. Requires 1 <= x <= p-1.
bool IsQr(const BigInt& p, const BigInt& x);

// An exponent / PRF value in the canonical residue set {1, ..., q}.
// The value q plays the role of exponent 0 (g^q == 1 mod p).
class ZqElement {
 public:
  // Throws InvalidArgument unless 1 <= value <= q.
  ZqElement(BigInt value, BigInt q);

  const BigInt& value() const { return value_; }
  const BigInt& q() const { return q_; }

  friend bool operator==(const ZqElement&, const ZqElement&) = default;

 private:
  BigInt value_;
  BigInt q_;
};

// The fold QR_p -> {1..q}: x if x <= q, else p - x. Throws InvalidArgument if
// x is not a quadratic residue mod p.
ZqElement QrToZq(const BigInt& p, const BigInt& x);

// Inverse fold {1..q} -> QR_p: y if y is a residue, else p - y.
// Throws InvalidArgument if y is outside {1..q}.
BigInt ZqToQr(const BigInt& p, const BigInt& y);

// ---------------------------------------------------------------------------
// Group instances
// ---------------------------------------------------------------------------

// A DDH parameterization (p, g, g^a) over the quadratic residues of a safe
// prime p = 2q + 1. The secret exponent is only retained in test mode.
//
// Invariants (checked by Create):
//   * p and q = (p-1)/2 are prime, and p > 5;
//   * g and g_a are quadratic residues different from 1;
//   * when present, 1 <= a_secret <= q-1 and g^a_secret == g_a.
//
// p = 5 is rejected: there -1 is itself a residue, so the fold QR_p -> {1..q}
// maps both residues {1, 4} to 1 and the keyed function built on it is not
// well defined. Every larger safe prime has q odd and p = 3 mod 4.
class GroupInstance {
 public:
  static GroupInstance Create(BigInt p, BigInt g, BigInt g_a,
                              std::optional<BigInt> a_secret = std::nullopt);

  unsigned n() const { return n_; }
  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& g() const { return g_; }
  const BigInt& g_a() const { return g_a_; }
  const std::optional<BigInt>& a_secret() const { return a_secret_; }

  GroupInstance WithoutSecret() const;

  // Short fingerprint of (p, g, g_a), used to bind keys to their instance.
  const std::string& Id() const { return id_; }

  // Equality of the public parameterization (the secret is ignored).
  bool SameParams(const GroupInstance& other) const {
    return p_ == other.p_ && g_ == other.g_ && g_a_ == other.g_a_;
  }
  friend bool operator==(const GroupInstance&, const GroupInstance&) = default;

 private:
  GroupInstance() = default;

  unsigned n_ = 0;
  BigInt p_, q_, g_, g_a_;
  std::optional<BigInt> a_secret_;
  std::string id_;
};

struct InstanceOptions {
  // Random n-bit candidates tried before giving up with ResourceError.
  uint64_t max_candidates = uint64_t{1} << 22;
  bool keep_secret = true;
};

// Samples an n-bit safe prime by rejection over random odd n-bit integers with
// the top bit set, a generator by squaring a uniform element of {2..p-2}
// (rejecting 1), and a from {1..q-1}.
//
// n < 3 throws InvalidArgument. n = 3 always yields p = 7 (see GroupInstance
// for why 5 is excluded).
GroupInstance GenerateInstance(unsigned n, Rng& rng, const InstanceOptions& options = {});

// ---------------------------------------------------------------------------
// Discrete logarithms
// ---------------------------------------------------------------------------

enum class DlogEngine { kBrute, kBsgs };

const char* DlogEngineName(DlogEngine engine);
DlogEngine ParseDlogEngine(const std::string& name);

// Hard ceiling on the modulus size handled by the classical engines. The
// arithmetic runs on 64-bit words with 128-bit products.
inline constexpr unsigned kMaxDlogBits = 62;

// Solves base^e == y (mod p) for e in {1..q} over a fixed (p, base).
//
// The baby-step table is built once in the constructor, so one solver can be
// reused across many targets. The residue 0 is reported as q.
class DiscreteLogSolver {
 public:
  // Validates that p is a safe prime. Throws InvalidArgument if base is not a
  // residue or is 1, ResourceError if p has more than max_bits bits.
  DiscreteLogSolver(const BigInt& p, const BigInt& base, DlogEngine engine,
                    unsigned max_bits = kMaxDlogBits);
  // Trusts the instance's invariants for p.
  DiscreteLogSolver(const GroupInstance& inst, const BigInt& base, DlogEngine engine,
                    unsigned max_bits = kMaxDlogBits);

  // Throws InvalidArgument if y is not a quadratic residue mod p.
  ZqElement Solve(const BigInt& y) const;

  DlogEngine engine() const { return engine_; }

 private:
  void Init(const BigInt& p, const BigInt& base, unsigned max_bits);
  uint64_t SolveBrute(uint64_t y) const;
  uint64_t SolveBsgs(uint64_t y) const;

  DlogEngine engine_;
  uint64_t p_ = 0;
  uint64_t q_ = 0;
  uint64_t base_ = 0;
  uint64_t step_ = 0;          // ceil(sqrt(q))
  uint64_t giant_factor_ = 0;  // base^(-step)
  std::unordered_map<uint64_t, uint64_t> baby_;
};

// One-shot convenience wrapper around DiscreteLogSolver.
ZqElement DiscreteLog(const BigInt& p, const BigInt& base, const BigInt& y,
                      DlogEngine engine = DlogEngine::kBsgs);

}  // namespace ddhlearn
