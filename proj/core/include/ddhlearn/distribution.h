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

#include <cstddef>
#include <limits>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ddhlearn/bitstring.h"

namespace ddhlearn {

using Rational = boost::multiprecision::cpp_rational;

// KL divergence of a pair whose supports are not nested: P(x) > 0 = Q(x).
inline constexpr double kInfiniteDivergence = std::numeric_limits<double>::infinity();

// Finite probability table over n-bit strings, immutable after construction.
// Zero-probability entries are dropped, so the keys are exactly the support.
//
// Prob is either Rational (exact mode: the masses must sum to exactly 1) or
// double (float mode: the sum must be within 1e-12 of 1).
template <typename Prob>
class DistTable {
 public:
  // Throws InvalidArgument on a key of the wrong length, a negative mass, or a
  // total mass different from 1.
  DistTable(size_t n_bits, std::map<BitString, Prob> probs);

  size_t n_bits() const { return n_bits_; }
  const std::map<BitString, Prob>& probs() const { return probs_; }
  size_t support_size() const { return probs_.size(); }
  // Mass at x, 0 when x is outside the support.
  Prob operator()(const BitString& x) const;

  friend bool operator==(const DistTable&, const DistTable&) = default;

 private:
  size_t n_bits_;
  std::map<BitString, Prob> probs_;
};

using ExactTable = DistTable<Rational>;
using FloatTable = DistTable<double>;

extern template class DistTable<Rational>;
extern template class DistTable<double>;

FloatTable ToFloat(const ExactTable& table);

// Base-2 KL divergence sum_x P(x) log2(P(x)/Q(x)), with 0 log(0/q) = 0 and
// kInfiniteDivergence when P puts mass where Q has none. Throws
// InvalidArgument when the domains differ.
double KlDivergence(const ExactTable& p, const ExactTable& q);
double KlDivergence(const FloatTable& p, const FloatTable& q);

// Half the L1 distance. The exact overload is an exact rational.
Rational TvDistance(const ExactTable& p, const ExactTable& q);
double TvDistance(const FloatTable& p, const FloatTable& q);

// Relative frequencies of the samples. Throws InvalidArgument on an empty
// list or ragged lengths.
FloatTable EmpiricalTable(const std::vector<BitString>& samples);

}  // namespace ddhlearn
