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
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "ddhlearn/bitstring.h"
#include "ddhlearn/prf.h"

namespace ddhlearn {

// A function {0,1}^n -> {1..q} behind an oracle.
class KeyedFunction {
 public:
  virtual ~KeyedFunction() = default;

  virtual size_t input_bits() const = 0;
  virtual const BigInt& q() const = 0;
  // Throws InvalidArgument if x.size() != input_bits().
  virtual ZqElement Eval(const BitString& x) = 0;
};

// x -> F_(p,g,g_a)(key, x).
class PrfFunction final : public KeyedFunction {
 public:
  PrfFunction(GroupInstance inst, PrfKey key) : inst_(std::move(inst)), key_(std::move(key)) {}

  size_t input_bits() const override { return inst_.n(); }
  const BigInt& q() const override { return inst_.q(); }
  ZqElement Eval(const BitString& x) override { return PrfEval(inst_, key_, x); }

  const GroupInstance& instance() const { return inst_; }
  const PrfKey& key() const { return key_; }

 private:
  GroupInstance inst_;
  PrfKey key_;
};

// A uniformly random function {0,1}^n -> {1..q}, sampled lazily: every fresh
// input gets an independent uniform value, repeated inputs get the memoized
// one. Distributionally identical to a pre-tabulated random function.
class LazyRandomFunction final : public KeyedFunction {
 public:
  LazyRandomFunction(size_t input_bits, BigInt q, Rng rng)
      : input_bits_(input_bits), q_(std::move(q)), rng_(std::move(rng)) {}

  size_t input_bits() const override { return input_bits_; }
  const BigInt& q() const override { return q_; }
  ZqElement Eval(const BitString& x) override;

  size_t memo_size() const { return table_.size(); }

 private:
  size_t input_bits_;
  BigInt q_;
  Rng rng_;
  std::unordered_map<BitString, BigInt> table_;
};

struct OracleRecord {
  BitString query;
  BigInt response;
};

// Query log shared by the oracle flavors. Single owner; not thread-safe.
class QueryLog {
 public:
  // Unlimited when budget is empty.
  explicit QueryLog(std::optional<uint64_t> budget = std::nullopt) : budget_(budget) {}

  uint64_t count() const { return records_.size(); }
  const std::vector<OracleRecord>& records() const { return records_; }
  const std::optional<uint64_t>& budget() const { return budget_; }

  // JSON array of {"query": "0101", "response": "17"}.
  nlohmann::ordered_json ToJson() const;

 protected:
  // Throws QueryBudgetExceeded when the next query would exceed the budget.
  void Charge() const;
  void Append(BitString query, BigInt response) {
    records_.push_back({std::move(query), std::move(response)});
  }

 private:
  std::optional<uint64_t> budget_;
  std::vector<OracleRecord> records_;
};

// MQ(f): returns f(x) at a caller-chosen x.
class MembershipOracle : public QueryLog {
 public:
  explicit MembershipOracle(KeyedFunction& fn, std::optional<uint64_t> budget = std::nullopt)
      : QueryLog(budget), fn_(fn) {}

  ZqElement Query(const BitString& x);
  size_t input_bits() const { return fn_.input_bits(); }
  const BigInt& q() const { return fn_.q(); }

 private:
  KeyedFunction& fn_;
};

struct LabeledExample {
  BitString x;
  ZqElement value;
};

// PEX(f, U): returns (x, f(x)) for x uniform over {0,1}^n. The RPEX variant
// returns only f(x).
class ExampleOracle : public QueryLog {
 public:
  ExampleOracle(KeyedFunction& fn, Rng rng, std::optional<uint64_t> budget = std::nullopt)
      : QueryLog(budget), fn_(fn), rng_(std::move(rng)) {}

  LabeledExample Query();
  ZqElement QueryValueOnly();
  size_t input_bits() const { return fn_.input_bits(); }
  const BigInt& q() const { return fn_.q(); }

 private:
  KeyedFunction& fn_;
  Rng rng_;
};

}  // namespace ddhlearn
