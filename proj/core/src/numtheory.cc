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

#include <cmath>
#include <cstdio>
#include <vector>

#include "ddhlearn/error.h"

namespace ddhlearn {

namespace {

constexpr int kMillerRabinRounds = 64;
constexpr uint64_t kWitnessSeed = 0x5afe9a1e5eedULL;

const std::vector<uint32_t>& SmallPrimes() {
  static const std::vector<uint32_t> primes = [] {
    constexpr uint32_t kLimit = 1u << 16;
    std::vector<bool> composite(kLimit, false);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i < kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (uint64_t j = uint64_t{i} * i; j < kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

unsigned BitLength(const BigInt& v) {
  return v == 0 ? 0 : static_cast<unsigned>(msb(v)) + 1;
}

__extension__ using Uint128 = unsigned __int128;

uint64_t MulMod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<Uint128>(a) * b) % m);
}

uint64_t PowMod(uint64_t base, uint64_t e, uint64_t m) {
  uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    e >>= 1;
  }
  return result;
}

bool MillerRabin(const BigInt& n) {
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Rng witnesses(kWitnessSeed);
  const BigInt hi = n - 2;
  for (int round = 0; round < kMillerRabinRounds; ++round) {
    BigInt a = witnesses.UniformRange(BigInt(2), hi);
    BigInt x = ModExp(n, a, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::string Hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

bool IsProbablePrime(const BigInt& n) {
  if (n < 2) return false;
  for (uint32_t prime : SmallPrimes()) {
    const BigInt bp(prime);
    if (bp * bp > n) return true;
    if (n % prime == 0) return n == prime;
  }
  // Every prime factor below 2^16 was ruled out, so n < 2^32 is prime.
  if (n < (BigInt(1) << 32)) return true;
  return MillerRabin(n);
}

bool IsSafePrime(const BigInt& p) {
  DDHLEARN_ENFORCE(p >= 2, InvalidArgument, "IsSafePrime: p must be >= 2");
  if (p < 5 || (p & 1) == 0) return false;
  return IsProbablePrime((p - 1) / 2) && IsProbablePrime(p);
}

BigInt ModExp(const BigInt& p, const BigInt& base, const BigInt& e) {
  DDHLEARN_ENFORCE(p >= 2, InvalidArgument, "ModExp: modulus must be >= 2");
  DDHLEARN_ENFORCE(base >= 1 && base < p, InvalidArgument, "ModExp: base must lie in [1, p-1]");
  DDHLEARN_ENFORCE(e >= 0, InvalidArgument, "ModExp: exponent must be non-negative");
  BigInt result = 1;
  for (int bit = static_cast<int>(BitLength(e)) - 1; bit >= 0; --bit) {
    result = (result * result) % p;
    if (bit_test(e, static_cast<unsigned>(bit))) result = (result * base) % p;
  }
  return result % p;
}

bool IsQr(const BigInt& p, const BigInt& x) {
  DDHLEARN_ENFORCE(x >= 1 && x < p, InvalidArgument, "IsQr: x must lie in [1, p-1]");
  return ModExp(p, x, (p - 1) / 2) == 1;
}

ZqElement::ZqElement(BigInt value, BigInt q) : value_(std::move(value)), q_(std::move(q)) {
  DDHLEARN_ENFORCE(value_ >= 1 && value_ <= q_, InvalidArgument,
                   "Z_q element " + value_.str() + " outside {1.." + q_.str() + "}");
}

ZqElement QrToZq(const BigInt& p, const BigInt& x) {
  DDHLEARN_ENFORCE(x >= 1 && x < p && IsQr(p, x), InvalidArgument,
                   "QrToZq: " + x.str() + " is not a quadratic residue mod " + p.str());
  const BigInt q = (p - 1) / 2;
  return ZqElement(x <= q ? x : BigInt(p - x), q);
}

BigInt ZqToQr(const BigInt& p, const BigInt& y) {
  const BigInt q = (p - 1) / 2;
  DDHLEARN_ENFORCE(y >= 1 && y <= q, InvalidArgument,
                   "ZqToQr: " + y.str() + " outside {1.." + q.str() + "}");
  return IsQr(p, y) ? y : BigInt(p - y);
}

namespace {

std::string Fingerprint(const BigInt& p, const BigInt& g, const BigInt& g_a) {
  const std::string text = p.str() + ":" + g.str() + ":" + g_a.str();
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return Hex64(h);
}

}  // namespace

GroupInstance GroupInstance::Create(BigInt p, BigInt g, BigInt g_a,
                                    std::optional<BigInt> a_secret) {
  DDHLEARN_ENFORCE(p >= 2 && IsSafePrime(p), InvalidInstance,
                   "p = " + p.str() + " is not a safe prime");
  DDHLEARN_ENFORCE(p != 5, InvalidInstance,
                   "p = 5 is excluded: -1 is a residue mod 5, so the fold QR_p -> {1..q} "
                   "is not injective");
  DDHLEARN_ENFORCE(g >= 2 && g < p && IsQr(p, g), InvalidInstance,
                   "g = " + g.str() + " is not a non-identity quadratic residue mod p");
  DDHLEARN_ENFORCE(g_a >= 2 && g_a < p && IsQr(p, g_a), InvalidInstance,
                   "g_a = " + g_a.str() + " is not a non-identity quadratic residue mod p");
  GroupInstance inst;
  inst.q_ = (p - 1) / 2;
  if (a_secret) {
    DDHLEARN_ENFORCE(*a_secret >= 1 && *a_secret < inst.q_, InvalidInstance,
                     "a_secret must lie in {1..q-1}");
    DDHLEARN_ENFORCE(ModExp(p, g, *a_secret) == g_a, InvalidInstance,
                     "a_secret does not satisfy g^a = g_a mod p");
  }
  inst.n_ = BitLength(p);
  inst.p_ = std::move(p);
  inst.g_ = std::move(g);
  inst.g_a_ = std::move(g_a);
  inst.a_secret_ = std::move(a_secret);
  inst.id_ = Fingerprint(inst.p_, inst.g_, inst.g_a_);
  return inst;
}

GroupInstance GroupInstance::WithoutSecret() const {
  GroupInstance copy = *this;
  copy.a_secret_.reset();
  return copy;
}

GroupInstance GenerateInstance(unsigned n, Rng& rng, const InstanceOptions& options) {
  DDHLEARN_ENFORCE(n >= 3, InvalidArgument,
                   "n must be >= 3: no safe prime has fewer than 3 bits (2 and 3 are not safe)");
  const BigInt top = BigInt(1) << (n - 1);
  BigInt p;
  bool found = false;
  for (uint64_t attempt = 0; attempt < options.max_candidates; ++attempt) {
    // Top bit set, low bit set; the remaining n-2 bits are uniform.
    BigInt candidate = top | (rng.RandomBits(n - 2) << 1) | 1;
    if (candidate == 5) continue;
    if (IsSafePrime(candidate)) {
      p = std::move(candidate);
      found = true;
      break;
    }
  }
  DDHLEARN_ENFORCE(found, ResourceError,
                   "no " + std::to_string(n) + "-bit safe prime found within " +
                       std::to_string(options.max_candidates) + " candidates");

  const BigInt q = (p - 1) / 2;
  BigInt g;
  do {
    BigInt h = rng.UniformRange(BigInt(2), BigInt(p - 2));
    g = (h * h) % p;
  } while (g == 1);
  BigInt a = rng.UniformRange(BigInt(1), BigInt(q - 1));
  BigInt g_a = ModExp(p, g, a);
  return GroupInstance::Create(std::move(p), std::move(g), std::move(g_a),
                               options.keep_secret ? std::optional<BigInt>(std::move(a))
                                                   : std::nullopt);
}

const char* DlogEngineName(DlogEngine engine) {
  return engine == DlogEngine::kBrute ? "brute" : "bsgs";
}

DlogEngine ParseDlogEngine(const std::string& name) {
  if (name == "brute") return DlogEngine::kBrute;
  if (name == "bsgs") return DlogEngine::kBsgs;
  throw InvalidArgument("unknown dlog engine '" + name + "' (expected brute|bsgs)");
}

DiscreteLogSolver::DiscreteLogSolver(const BigInt& p, const BigInt& base, DlogEngine engine,
                                     unsigned max_bits)
    : engine_(engine) {
  DDHLEARN_ENFORCE(p >= 2 && IsSafePrime(p), InvalidArgument,
                   "discrete log: p = " + p.str() + " is not a safe prime");
  Init(p, base, max_bits);
}

DiscreteLogSolver::DiscreteLogSolver(const GroupInstance& inst, const BigInt& base,
                                     DlogEngine engine, unsigned max_bits)
    : engine_(engine) {
  Init(inst.p(), base, max_bits);
}

void DiscreteLogSolver::Init(const BigInt& p, const BigInt& base, unsigned max_bits) {
  const unsigned bits = BitLength(p);
  DDHLEARN_ENFORCE(bits <= std::min(max_bits, kMaxDlogBits), ResourceError,
                   "discrete log: " + std::to_string(bits) + "-bit modulus exceeds the " +
                       std::to_string(std::min(max_bits, kMaxDlogBits)) + "-bit engine cap");
  DDHLEARN_ENFORCE(base >= 1 && base < p && IsQr(p, base), InvalidArgument,
                   "discrete log: base " + base.str() + " is not a quadratic residue");
  DDHLEARN_ENFORCE(base != 1, InvalidArgument, "discrete log: base 1 is not a generator");
  p_ = p.convert_to<uint64_t>();
  q_ = (p_ - 1) / 2;
  base_ = base.convert_to<uint64_t>();
  if (engine_ == DlogEngine::kBsgs) {
    step_ = static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(q_))));
    while (step_ * step_ < q_) ++step_;
    baby_.reserve(step_);
    uint64_t cur = 1;
    for (uint64_t j = 0; j < step_; ++j) {
      baby_.emplace(cur, j);
      cur = MulMod(cur, base_, p_);
    }
    // base has order q, so base^(-step) = base^(q - step mod q).
    giant_factor_ = PowMod(base_, (q_ - step_ % q_) % q_, p_);
  }
}

ZqElement DiscreteLogSolver::Solve(const BigInt& y) const {
  DDHLEARN_ENFORCE(y >= 1 && y < BigInt(p_) && IsQr(BigInt(p_), y), InvalidArgument,
                   "discrete log: target " + y.str() + " is not a quadratic residue");
  const uint64_t target = y.convert_to<uint64_t>();
  const uint64_t e = engine_ == DlogEngine::kBrute ? SolveBrute(target) : SolveBsgs(target);
  return ZqElement(BigInt(e == 0 ? q_ : e), BigInt(q_));
}

uint64_t DiscreteLogSolver::SolveBrute(uint64_t y) const {
  uint64_t cur = base_;
  for (uint64_t e = 1; e <= q_; ++e) {
    if (cur == y) return e % q_;
    cur = MulMod(cur, base_, p_);
  }
  throw Error("discrete log: no solution found (base does not generate QR_p)");
}

uint64_t DiscreteLogSolver::SolveBsgs(uint64_t y) const {
  uint64_t gamma = y;
  for (uint64_t i = 0; i <= step_; ++i) {
    if (auto it = baby_.find(gamma); it != baby_.end()) {
      return (i * step_ + it->second) % q_;
    }
    gamma = MulMod(gamma, giant_factor_, p_);
  }
  throw Error("discrete log: no solution found (base does not generate QR_p)");
}

ZqElement DiscreteLog(const BigInt& p, const BigInt& base, const BigInt& y, DlogEngine engine) {
  return DiscreteLogSolver(p, base, engine).Solve(y);
}

}  // namespace ddhlearn
