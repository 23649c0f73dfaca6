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

#include <doctest.h>

#include <string>
#include <vector>

#include "oracles.hpp"
#include "twolevel/errors.hpp"
#include "twolevel/gray.hpp"

using namespace twolevel;

namespace {

std::vector<BitString> parse_all(std::initializer_list<const char*> labels) {
  std::vector<BitString> out;
  for (const char* s : labels) out.push_back(BitString::parse(s));
  return out;
}

std::vector<std::size_t> perm(const GrayCode& g) {
  const auto p = gray_to_permutation(g);
  return {p.values().begin(), p.values().end()};
}

}  // namespace

TEST_CASE("gray_code small cases") {
  CHECK(render_sequence(gray_code(1).seq) == "0,1");
  CHECK(render_sequence(gray_code(2).seq) == "00,01,11,10");
  CHECK(render_sequence(gray_code(3).seq) == "000,001,011,010,110,111,101,100");
  CHECK_THROWS_AS(gray_code(0), DomainError);
  CHECK_THROWS_AS(gray_code(21), DomainError);
}

TEST_CASE("gray_to_permutation") {
  CHECK(perm(gray_code(1)) == std::vector<std::size_t>{1, 2});
  CHECK(perm(gray_code(2)) == std::vector<std::size_t>{1, 2, 4, 3});
  CHECK(perm(gray_code(3)) == std::vector<std::size_t>{1, 2, 4, 3, 7, 8, 6, 5});
  CHECK(render_permutation(gray_to_permutation(gray_code(3)).values()) == "1,2,4,3,7,8,6,5");
}

TEST_CASE("gray code invariants hold exhaustively up to 12 bits") {
  for (std::size_t n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const auto g = gray_code(n);
    CHECK(is_gray_code(g));
    const auto expected = oracle::closed_form_gray(n);
    REQUIRE(g.seq.size() == expected.size());
    bool same = true;
    for (std::size_t i = 0; i < expected.size(); ++i) same = same && g.seq[i].value() == expected[i];
    CHECK(same);
    CHECK_NOTHROW(gray_to_permutation(g));

    if (n < 12) {
      // Second half of G_{n+1} is the reversed first half with the leading bit set.
      const auto next = gray_code(n + 1);
      const std::size_t half = g.seq.size();
      bool reflective = true;
      for (std::size_t i = 0; i < half; ++i) {
        reflective = reflective && next.seq[i].value() == g.seq[i].value();
        reflective = reflective && next.seq[half + i].value() == ((std::uint64_t{1} << n) | g.seq[half - 1 - i].value());
      }
      CHECK(reflective);
    }
  }
}

TEST_CASE("is_gray_code rejects broken sequences") {
  auto g = gray_code(3);
  std::swap(g.seq[2], g.seq[3]);
  CHECK_FALSE(is_gray_code(g));

  GrayCode binary;
  binary.n = 2;
  binary.seq = parse_all({"00", "01", "10", "11"});
  CHECK_FALSE(is_gray_code(binary));

  GrayCode no_wrap;
  no_wrap.n = 3;
  no_wrap.seq = parse_all({"000", "001", "011", "010", "110", "100", "101", "111"});
  CHECK(validate_gray_path(no_wrap.seq).ok);
  CHECK_FALSE(is_gray_code(no_wrap));
}

TEST_CASE("validate_gray_path") {
  CHECK(validate_gray_path(parse_all({"011", "010", "110", "100", "101"})).ok);

  const auto bad = validate_gray_path(parse_all({"00", "11"}));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.first_violation.has_value());
  CHECK(*bad.first_violation == 1);

  const auto later = validate_gray_path(parse_all({"000", "001", "011", "000"}));
  CHECK(later.first_violation == std::optional<std::size_t>{3});

  const auto g4 = gray_code(4);
  CHECK(validate_gray_path(g4.seq).ok);
  CHECK(hamming_distance(g4.seq.back(), g4.seq.front()) == 1);

  CHECK_THROWS_AS(validate_gray_path(std::vector<BitString>{}), DimensionError);
  CHECK_THROWS_AS(validate_gray_path(parse_all({"00", "010"})), DimensionError);
}

TEST_CASE("hamming_distance") {
  CHECK(hamming_distance(BitString::parse("000"), BitString::parse("000")) == 0);
  CHECK(hamming_distance(BitString::parse("000"), BitString::parse("111")) == 3);
  const auto g3 = gray_code(3);
  for (std::size_t i = 0; i + 1 < g3.seq.size(); ++i) CHECK(hamming_distance(g3.seq[i], g3.seq[i + 1]) == 1);
  CHECK_THROWS_AS(hamming_distance(BitString::parse("00"), BitString::parse("000")), DimensionError);
}

TEST_CASE("BitString") {
  const auto b = BitString::parse("0110");
  CHECK(b.width() == 4);
  CHECK(b.value() == 6);
  CHECK(b.bit(1) == 0);
  CHECK(b.bit(2) == 1);
  CHECK(b.to_string() == "0110");
  CHECK(BitString(3, 5).to_string() == "101");
  CHECK_THROWS_AS(BitString::parse("01a"), ParseError);
  CHECK_THROWS_AS(BitString::parse(""), ParseError);
  CHECK_THROWS_AS(BitString(2, 4), DomainError);
}
