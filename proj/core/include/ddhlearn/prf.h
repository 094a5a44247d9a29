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

#include <string>
#include <utility>

#include "ddhlearn/bitstring.h"
#include "ddhlearn/numtheory.h"

namespace ddhlearn {

// A PRF key b in {1..q}, bound to the instance it was drawn for.
class PrfKey {
 public:
  // Throws InvalidArgument unless 1 <= b <= inst.q().
  PrfKey(const GroupInstance& inst, BigInt b);

  static PrfKey Random(const GroupInstance& inst, Rng& rng);

  const BigInt& value() const { return value_.value(); }
  const ZqElement& element() const { return value_; }
  const std::string& instance_id() const { return instance_id_; }

  friend bool operator==(const PrfKey&, const PrfKey&) = default;

 private:
  ZqElement value_;
  std::string instance_id_;
};

// The length-doubling generator folded back into {1..q}:
//   b -> (fold(g^b mod p), fold(g_a^b mod p)).
std::pair<ZqElement, ZqElement> PrgEval(const GroupInstance& inst, const ZqElement& b);

// Walks the GGM tree from `start` along `path` (leftmost bit first); bit 0
// takes the left half of PrgEval, bit 1 the right half. Accepts any path
// length, which lets callers split a walk at an interior node.
ZqElement GgmWalk(const GroupInstance& inst, const ZqElement& start, const BitString& path);

// The keyed function F_(p,g,g_a)(b, x) for x of exactly inst.n() bits.
// Throws InvalidArgument on a length mismatch or a key from another instance.
ZqElement PrfEval(const GroupInstance& inst, const PrfKey& key, const BitString& x);

}  // namespace ddhlearn
