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

#include "twolevel/gray.hpp"

#include <bit>

#include "twolevel/errors.hpp"

namespace twolevel {

BitString::BitString(std::size_t width, std::uint64_t value) : width_(width), value_(value) {
  if (width == 0 || width > 63) throw DomainError("bit string width must be in 1..63");
  if (value >> width != 0) throw DomainError("value does not fit in " + std::to_string(width) + " bits");
}

BitString BitString::parse(std::string_view text) {
  if (text.empty() || text.size() > 63) throw ParseError("bit string must have 1..63 characters");
  std::uint64_t v = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw ParseError("bit string contains '" + std::string(1, c) + "'");
    v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BitString(text.size(), v);
}

std::string BitString::to_string() const {
  std::string s(width_, '0');
  for (std::size_t i = 0; i < width_; ++i)
    if ((value_ >> (width_ - 1 - i)) & 1U) s[i] = '1';
  return s;
}

std::size_t hamming_distance(const BitString& x, const BitString& y) {
  if (x.width() != y.width()) throw DimensionError("hamming_distance: width mismatch");
  return static_cast<std::size_t>(std::popcount(x.value() ^ y.value()));
}

GrayCode gray_code(std::size_t n) {
  if (n < 1 || n > kMaxGrayBits) throw DomainError("gray_code: n must be in 1.." + std::to_string(kMaxGrayBits));
  std::vector<std::uint64_t> values{0, 1};
  for (std::size_t m = 1; m < n; ++m) {
    const std::uint64_t high = std::uint64_t{1} << m;
    const std::size_t half = values.size();
    values.reserve(2 * half);
    for (std::size_t i = half; i-- > 0;) values.push_back(high | values[i]);
  }
  GrayCode g;
  g.n = n;
  g.seq.reserve(values.size());
  for (std::uint64_t v : values) g.seq.emplace_back(n, v);
  return g;
}

PermutationOrder gray_to_permutation(const GrayCode& g) {
  std::vector<std::size_t> p;
  p.reserve(g.seq.size());
  for (const auto& x : g.seq) p.push_back(static_cast<std::size_t>(x.value()) + 1);
  return PermutationOrder(std::move(p));
}

PathCheck validate_gray_path(std::span<const BitString> seq) {
  if (seq.empty()) throw DimensionError("validate_gray_path: empty sequence");
  for (const auto& x : seq)
    if (x.width() != seq.front().width()) throw DimensionError("validate_gray_path: mixed widths");
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    if (hamming_distance(seq[k], seq[k + 1]) != 1) return {false, k + 1};
  }
  return {};
}

bool is_gray_code(const GrayCode& g) {
  if (g.n < 1 || g.n > 63) return false;
  const std::size_t count = std::size_t{1} << g.n;
  if (g.seq.size() != count) return false;
  std::vector<bool> seen(count, false);
  for (const auto& x : g.seq) {
    if (x.width() != g.n || seen[x.value()]) return false;
    seen[x.value()] = true;
  }
  if (!validate_gray_path(g.seq).ok) return false;
  return hamming_distance(g.seq.back(), g.seq.front()) == 1;
}

std::string render_sequence(std::span<const BitString> seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += seq[i].to_string();
  }
  return out;
}

std::string render_permutation(std::span<const std::size_t> p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

}  // namespace twolevel
