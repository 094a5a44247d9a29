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

#include "ddhlearn/distribution.h"

#include <cmath>

#include "ddhlearn/error.h"

namespace ddhlearn {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void Add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

bool IsUnitMass(const std::map<BitString, Rational>& probs) {
  Rational total = 0;
  for (const auto& [_, p] : probs) total += p;
  return total == 1;
}

bool IsUnitMass(const std::map<BitString, double>& probs) {
  CompensatedSum total;
  for (const auto& [_, p] : probs) total.Add(p);
  return std::abs(total.value() - 1.0) <= 1e-12;
}

double ToDouble(const Rational& r) { return r.convert_to<double>(); }
double ToDouble(double d) { return d; }

template <typename Prob>
void CheckSameDomain(const DistTable<Prob>& p, const DistTable<Prob>& q) {
  DDHLEARN_ENFORCE(p.n_bits() == q.n_bits(), InvalidArgument,
                   "distribution domains differ: " + std::to_string(p.n_bits()) + " vs " +
                       std::to_string(q.n_bits()) + " bits");
}

template <typename Prob>
double KlImpl(const DistTable<Prob>& p, const DistTable<Prob>& q) {
  CheckSameDomain(p, q);
  CompensatedSum total;
  for (const auto& [x, px] : p.probs()) {
    const Prob qx = q(x);
    if (qx == 0) return kInfiniteDivergence;
    const Prob ratio = px / qx;
    total.Add(ToDouble(px) * std::log2(ToDouble(ratio)));
  }
  // Rounding can leave a tiny negative residue for P ~ Q.
  return std::max(0.0, total.value());
}

template <typename Prob, typename Acc>
Acc TvImpl(const DistTable<Prob>& p, const DistTable<Prob>& q, Acc acc) {
  CheckSameDomain(p, q);
  for (const auto& [x, px] : p.probs()) {
    const Prob qx = q(x);
    acc(px > qx ? Prob(px - qx) : Prob(qx - px));
  }
  for (const auto& [x, qx] : q.probs()) {
    if (p.probs().count(x) == 0) acc(qx);
  }
  return acc;
}

}  // namespace

template <typename Prob>
DistTable<Prob>::DistTable(size_t n_bits, std::map<BitString, Prob> probs) : n_bits_(n_bits) {
  for (auto& [x, px] : probs) {
    DDHLEARN_ENFORCE(x.size() == n_bits, InvalidArgument,
                     "distribution key '" + x.ToString() + "' is not " +
                         std::to_string(n_bits) + " bits long");
    DDHLEARN_ENFORCE(px >= 0, InvalidArgument, "negative probability mass");
    if (px != 0) probs_.emplace(x, std::move(px));
  }
  DDHLEARN_ENFORCE(IsUnitMass(probs_), InvalidArgument, "probabilities do not sum to 1");
}

template <typename Prob>
Prob DistTable<Prob>::operator()(const BitString& x) const {
  auto it = probs_.find(x);
  return it == probs_.end() ? Prob(0) : it->second;
}

template class DistTable<Rational>;
template class DistTable<double>;

FloatTable ToFloat(const ExactTable& table) {
  std::map<BitString, double> probs;
  for (const auto& [x, px] : table.probs()) probs.emplace(x, ToDouble(px));
  return FloatTable(table.n_bits(), std::move(probs));
}

double KlDivergence(const ExactTable& p, const ExactTable& q) { return KlImpl(p, q); }
double KlDivergence(const FloatTable& p, const FloatTable& q) { return KlImpl(p, q); }

Rational TvDistance(const ExactTable& p, const ExactTable& q) {
  struct Acc {
    Rational sum = 0;
    void operator()(const Rational& v) { sum += v; }
  };
  return TvImpl(p, q, Acc{}).sum / 2;
}

double TvDistance(const FloatTable& p, const FloatTable& q) {
  struct Acc {
    CompensatedSum sum;
    void operator()(double v) { sum.Add(v); }
  };
  return std::min(1.0, TvImpl(p, q, Acc{}).sum.value() / 2);
}

FloatTable EmpiricalTable(const std::vector<BitString>& samples) {
  DDHLEARN_ENFORCE(!samples.empty(), InvalidArgument, "empirical table of an empty sample");
  const size_t width = samples.front().size();
  std::map<BitString, uint64_t> counts;
  for (const auto& s : samples) {
    DDHLEARN_ENFORCE(s.size() == width, InvalidArgument, "samples have ragged lengths");
    ++counts[s];
  }
  std::map<BitString, double> probs;
  const double total = static_cast<double>(samples.size());
  for (const auto& [x, c] : counts) probs.emplace(x, static_cast<double>(c) / total);
  return FloatTable(width, std::move(probs));
}

}  // namespace ddhlearn
