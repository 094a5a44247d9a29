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

#include "ddhlearn/oracle.h"

#include "ddhlearn/error.h"

namespace ddhlearn {

ZqElement LazyRandomFunction::Eval(const BitString& x) {
  DDHLEARN_ENFORCE(x.size() == input_bits_, InvalidArgument,
                   "random function queried outside its domain");
  auto [it, inserted] = table_.try_emplace(x);
  if (inserted) it->second = rng_.UniformRange(BigInt(1), q_);
  return ZqElement(it->second, q_);
}

nlohmann::ordered_json QueryLog::ToJson() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : records_) {
    out.push_back({{"query", r.query.ToString()}, {"response", r.response.str()}});
  }
  return out;
}

void QueryLog::Charge() const {
  if (budget_ && records_.size() >= *budget_) {
    throw QueryBudgetExceeded("oracle query budget of " + std::to_string(*budget_) +
                              " exhausted");
  }
}

ZqElement MembershipOracle::Query(const BitString& x) {
  Charge();
  ZqElement value = fn_.Eval(x);
  Append(x, value.value());
  return value;
}

LabeledExample ExampleOracle::Query() {
  Charge();
  BitString x = BitString::Random(fn_.input_bits(), rng_);
  ZqElement value = fn_.Eval(x);
  Append(x, value.value());
  return {std::move(x), std::move(value)};
}

ZqElement ExampleOracle::QueryValueOnly() { return Query().value; }

}  // namespace ddhlearn
