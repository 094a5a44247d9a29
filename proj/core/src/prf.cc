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

#include "ddhlearn/prf.h"

#include "ddhlearn/error.h"

namespace ddhlearn {

namespace {

// The fold for values already known to be residues (powers of g or g_a).
ZqElement Fold(const GroupInstance& inst, const BigInt& x) {
  return ZqElement(x <= inst.q() ? x : BigInt(inst.p() - x), inst.q());
}

void CheckDomain(const GroupInstance& inst, const ZqElement& b) {
  DDHLEARN_ENFORCE(b.q() == inst.q(), InvalidArgument,
                   "Z_q element belongs to a different modulus");
}

}  // namespace

PrfKey::PrfKey(const GroupInstance& inst, BigInt b)
    : value_(std::move(b), inst.q()), instance_id_(inst.Id()) {}

PrfKey PrfKey::Random(const GroupInstance& inst, Rng& rng) {
  return PrfKey(inst, rng.UniformRange(BigInt(1), inst.q()));
}

std::pair<ZqElement, ZqElement> PrgEval(const GroupInstance& inst, const ZqElement& b) {
  CheckDomain(inst, b);
  return {Fold(inst, ModExp(inst.p(), inst.g(), b.value())),
          Fold(inst, ModExp(inst.p(), inst.g_a(), b.value()))};
}

ZqElement GgmWalk(const GroupInstance& inst, const ZqElement& start, const BitString& path) {
  CheckDomain(inst, start);
  ZqElement node = start;
  for (size_t j = 0; j < path.size(); ++j) {
    const BigInt& base = path[j] ? inst.g_a() : inst.g();
    node = Fold(inst, ModExp(inst.p(), base, node.value()));
  }
  return node;
}

ZqElement PrfEval(const GroupInstance& inst, const PrfKey& key, const BitString& x) {
  DDHLEARN_ENFORCE(x.size() == inst.n(), InvalidArgument,
                   "PRF input has " + std::to_string(x.size()) + " bits, instance expects " +
                       std::to_string(inst.n()));
  DDHLEARN_ENFORCE(key.instance_id() == inst.Id(), InvalidArgument,
                   "PRF key is bound to a different instance");
  return GgmWalk(inst, key.element(), x);
}

}  // namespace ddhlearn
