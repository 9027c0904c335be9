// Copyright 2026 The unistego Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "support.hpp"
#include "unistego/errors.hpp"
#include "unistego/permutation_rank.hpp"

using namespace unistego;
using namespace unistego::testing;

namespace {

Composition dense(std::initializer_list<std::uint32_t> counts) {
  const std::vector<std::uint32_t> v(counts);
  return Composition(v);
}

}  // namespace

TEST_CASE("class_size examples") {
  CHECK(class_size(dense({1, 1, 1})) == 6);
  CHECK(class_size(dense({3, 0, 0})) == 1);
  // "aabb" has brute_force_class size 6.
  const Alphabet ab = letters("ab");
  CHECK(brute_force_class(ids(ab, "aabb")).size() == 6);
  CHECK(class_size(dense({2, 2})) == 6);
}

TEST_CASE("rank and unrank on the three-letter class") {
  const Alphabet abc = letters("abc");
  CHECK(rank(ids(abc, "bac"), abc) == 2);
  CHECK(rank(ids(abc, "abc"), abc) == 0);
  CHECK(rank(ids(abc, "cab"), abc) == 4);
  CHECK(text(abc, unrank(dense({1, 1, 1}), 4)) == "cab");
  CHECK(text(abc, unrank(dense({1, 1, 1}), 0)) == "abc");

  const Alphabet ab = letters("ab");
  const auto members = brute_force_class(ids(ab, "aabb"));
  CHECK(text(ab, members.back()) == "bbaa");
  CHECK(text(ab, unrank(dense({2, 2}), 5)) == "bbaa");
}

TEST_CASE("rank and unrank errors") {
  const Alphabet abc = letters("abc");
  try {
    (void)unrank(dense({1, 1, 1}), 6);
    FAIL("expected IndexOutOfRange");
  } catch (const StegoError& e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfRange);
  }
  CHECK_THROWS_AS((void)unrank(dense({1, 1, 1}), BigInt(1) << 80), StegoError);
  CHECK_THROWS_AS((void)rank(Block{}, abc), StegoError);
  CHECK_THROWS_AS((void)rank(Block{0, 9}, abc), StegoError);
}

TEST_CASE("exhaustive agreement with brute-force enumeration, n <= 8, |A| <= 4") {
  std::size_t blocks_checked = 0;
  for (std::size_t k = 1; k <= 4; ++k) {
    const Alphabet a = letters(std::string("abcd").substr(0, k));
    for (std::size_t n = 1; n <= 8; ++n) {
      for (const Block& b : all_blocks(k, n)) {
        if (!std::is_sorted(b.begin(), b.end())) continue;
        const auto members = brute_force_class(b);
        const Composition comp = composition_of(b, a);
        REQUIRE(class_size(comp) == members.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
          REQUIRE(rank(members[i], a) == i);
          REQUIRE(unrank(comp, i) == members[i]);
          REQUIRE(detail::rank_wide(members[i], comp) == i);
        }
        blocks_checked += members.size();
      }
    }
  }
  // Every block of every length was visited exactly once.
  std::size_t expected = 0;
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t n = 1, p = k; n <= 8; ++n, p *= k) expected += p;
  CHECK(blocks_checked == expected);
}

TEST_CASE("64 distinct symbols give 64! without overflow") {
  std::vector<std::uint32_t> ones(64, 1);
  const BigInt size = class_size(Composition(ones));
  BigInt fact = 1;
  for (int i = 2; i <= 64; ++i) fact *= i;
  CHECK(size == fact);
  CHECK(bit_length(size) == 296);
}

TEST_CASE("fixed-width and arbitrary-precision paths agree") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t k = 2 + gen() % 6;
    const std::size_t n = 2 + gen() % (kMaxFixedWidthBlock - 1);
    Block b(n);
    for (auto& s : b) s = static_cast<SymbolId>(gen() % k);
    Composition comp;
    comp.assign(b, k);
    REQUIRE(BigInt(class_size_u64(comp)) == class_size(comp));
    const std::uint64_t r = rank_u64(b, comp);
    REQUIRE(detail::rank_wide(b, comp) == r);
    Block back(n), wide(n);
    unrank_u64(comp, r, back);
    detail::unrank_wide(comp, r, wide);
    REQUIRE(back == b);
    REQUIRE(wide == b);
  }
}

TEST_CASE("long blocks round-trip and rank is monotone in lexicographic order") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 2 + gen() % 30;
    const std::size_t n = 21 + gen() % 60;
    Block x(n);
    for (auto& s : x) s = static_cast<SymbolId>(gen() % k);
    Block y = x;
    std::shuffle(y.begin(), y.end(), gen);
    Composition comp;
    comp.assign(x, k);
    const BigInt rx = rank(x, comp), ry = rank(y, comp);
    REQUIRE(rx < class_size(comp));
    REQUIRE(unrank(comp, rx) == x);
    REQUIRE(unrank(comp, ry) == y);
    REQUIRE((x < y) == (rx < ry));
  }
}
