// Copyright 2026 The twolevel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twolevel/decomposition.hpp"

namespace twolevel {

/// Fixed-width binary label, rendered most significant bit first. Bit position 1 is the
/// leftmost character.
class BitString {
 public:
  BitString(std::size_t width, std::uint64_t value);
  /// Parses "0110"-style text. Throws ParseError.
  static BitString parse(std::string_view text);

  std::size_t width() const { return width_; }
  std::uint64_t value() const { return value_; }
  /// Bit at 1-based position counted from the left.
  int bit(std::size_t position) const {
    return static_cast<int>((value_ >> (width_ - position)) & 1U);
  }
  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::size_t width_;
  std::uint64_t value_;
};

/// Number of differing positions. Throws DimensionError on width mismatch.
std::size_t hamming_distance(const BitString& x, const BitString& y);

struct GrayCode {
  std::size_t n = 0;
  std::vector<BitString> seq;
};

inline constexpr std::size_t kMaxGrayBits = 20;

/// Reflected Gray code: G_1 = (0, 1), G_{n+1} = (0G_n, 1 reverse(G_n)).
/// Throws DomainError unless 1 <= n <= 20.
GrayCode gray_code(std::size_t n);

/// p_k = 1 + value(seq_k).
PermutationOrder gray_to_permutation(const GrayCode& g);

struct PathCheck {
  bool ok = true;
  /// 1-based index k of the first pair (seq_k, seq_{k+1}) not at distance 1.
  std::optional<std::size_t> first_violation;
};

/// Consecutive entries must be at Hamming distance exactly 1. Wrap-around is not checked.
/// Throws DimensionError for empty input or mixed widths.
PathCheck validate_gray_path(std::span<const BitString> seq);

/// Distinctness, full coverage of 0..2^n-1, adjacency and cyclic closure.
bool is_gray_code(const GrayCode& g);

/// Comma-separated labels, e.g. "00,01,11,10".
std::string render_sequence(std::span<const BitString> seq);

/// Comma-separated 1-based integers.
std::string render_permutation(std::span<const std::size_t> p);

}  // namespace twolevel
