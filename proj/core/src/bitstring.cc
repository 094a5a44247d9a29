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

#include "ddhlearn/bitstring.h"

#include "ddhlearn/error.h"

namespace ddhlearn {

BitString BitString::FromString(std::string_view text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (char c : text) {
    DDHLEARN_ENFORCE(c == '0' || c == '1', ParseError,
                     "bit string contains non-binary character '" + std::string(1, c) + "'");
    bits.push_back(c == '1');
  }
  return BitString(std::move(bits));
}

BitString BitString::FromInt(const BigInt& v, size_t width) {
  DDHLEARN_ENFORCE(v >= 0, InvalidArgument, "cannot encode a negative integer");
  DDHLEARN_ENFORCE(v == 0 || static_cast<size_t>(msb(v)) < width, InvalidArgument,
                   v.str() + " does not fit in " + std::to_string(width) + " bits");
  BitString out(width);
  for (size_t i = 0; i < width; ++i) {
    out.bits_[width - 1 - i] = bit_test(v, static_cast<unsigned>(i));
  }
  return out;
}

BitString BitString::FromUint(uint64_t v, size_t width) { return FromInt(BigInt(v), width); }

BitString BitString::Random(size_t length, Rng& rng) {
  BitString out(length);
  uint64_t word = 0;
  for (size_t i = 0; i < length; ++i) {
    if (i % 64 == 0) word = rng.NextU64();
    out.bits_[i] = (word >> 63) != 0;
    word <<= 1;
  }
  return out;
}

BitString BitString::Slice(size_t pos, size_t length) const {
  DDHLEARN_ENFORCE(pos <= bits_.size() && length <= bits_.size() - pos, InvalidArgument,
                   "bit string slice out of range");
  return BitString(std::vector<bool>(bits_.begin() + static_cast<std::ptrdiff_t>(pos),
                                     bits_.begin() + static_cast<std::ptrdiff_t>(pos + length)));
}

BitString BitString::Concat(const BitString& other) const {
  std::vector<bool> bits = bits_;
  bits.insert(bits.end(), other.bits_.begin(), other.bits_.end());
  return BitString(std::move(bits));
}

BigInt BitString::ToInt() const {
  BigInt v = 0;
  for (bool b : bits_) {
    v <<= 1;
    if (b) v |= 1;
  }
  return v;
}

uint64_t BitString::ToUint() const {
  DDHLEARN_ENFORCE(bits_.size() <= 64, InvalidArgument, "bit string wider than 64 bits");
  uint64_t v = 0;
  for (bool b : bits_) v = (v << 1) | (b ? 1 : 0);
  return v;
}

std::string BitString::ToString() const {
  std::string s;
  s.reserve(bits_.size());
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace ddhlearn
