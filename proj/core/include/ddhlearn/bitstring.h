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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ddhlearn/rng.h"

namespace ddhlearn {

// Fixed-length binary string. Bit 0 is the leftmost (most significant) bit;
// this big-endian convention is used for integer encodings, PRF input
// consumption and every file format.
class BitString {
 public:
  BitString() = default;
  explicit BitString(size_t length) : bits_(length, false) {}
  explicit BitString(std::vector<bool> bits) : bits_(std::move(bits)) {}

  // Parses ASCII '0'/'1'. Throws ParseError on any other character.
  static BitString FromString(std::string_view text);
  // Big-endian encoding of v in exactly `width` bits. Throws InvalidArgument
  // if v >= 2^width or v < 0.
  static BitString FromInt(const BigInt& v, size_t width);
  static BitString FromUint(uint64_t v, size_t width);
  static BitString Random(size_t length, Rng& rng);

  size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  bool operator[](size_t i) const { return bits_[i]; }
  void Set(size_t i, bool value) { bits_[i] = value; }

  // Bits [pos, pos + length). Throws InvalidArgument when out of range.
  BitString Slice(size_t pos, size_t length) const;
  BitString Concat(const BitString& other) const;

  BigInt ToInt() const;
  // Throws InvalidArgument if the string is longer than 64 bits.
  uint64_t ToUint() const;
  std::string ToString() const;

  const std::vector<bool>& bits() const { return bits_; }

  friend bool operator==(const BitString&, const BitString&) = default;
  // Lexicographic; on equal lengths this is numeric order.
  friend auto operator<=>(const BitString& a, const BitString& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<bool> bits_;
};

inline BitString operator+(const BitString& a, const BitString& b) { return a.Concat(b); }

// BIN_n(v): v as an n-bit big-endian string. Throws InvalidArgument on
// overflow.
inline BitString BinN(const BigInt& v, size_t n) { return BitString::FromInt(v, n); }

}  // namespace ddhlearn

template <>
struct std::hash<ddhlearn::BitString> {
  size_t operator()(const ddhlearn::BitString& s) const noexcept {
    return std::hash<std::vector<bool>>()(s.bits()) ^ (s.size() * 0x9e3779b97f4a7c15ULL);
  }
};
