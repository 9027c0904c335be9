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
#include <sstream>

#include "support.hpp"
#include "unistego/alphabet.hpp"
#include "unistego/errors.hpp"

using namespace unistego;
using unistego::testing::ids;
using unistego::testing::letters;

TEST_CASE("composition counts letters") {
  const Alphabet abc = letters("abc");
  const std::vector<std::string> bac{"b", "a", "c"};
  const Composition c = composition_of(std::span<const std::string>(bac), abc);
  CHECK(c.dense() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(c.total() == 3);

  const Composition aaa = composition_of(ids(abc, "aaa"), abc);
  CHECK(aaa.dense() == std::vector<std::uint32_t>{3, 0, 0});
  CHECK(aaa.count(abc.index_of("b")) == 0);

  const Alphabet ab = letters("ab");
  CHECK(composition_of(ids(ab, "aabb"), ab).dense() == std::vector<std::uint32_t>{2, 2});
}

TEST_CASE("composition rejects unknown symbols") {
  const Alphabet abc = letters("abc");
  const std::vector<std::string> block{"a", "z"};
  try {
    (void)composition_of(std::span<const std::string>(block), abc);
    FAIL("expected UnknownSymbol");
  } catch (const StegoError& e) {
    CHECK(e.kind() == ErrorKind::UnknownSymbol);
  }
  const Block bad{0, 7};
  CHECK_THROWS_AS((void)composition_of(bad, abc), StegoError);
}

TEST_CASE("composition is permutation invariant") {
  const Alphabet a = letters("abcde");
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    Block b(1 + gen() % 12);
    for (auto& s : b) s = static_cast<SymbolId>(gen() % a.size());
    const Composition before = composition_of(b, a);
    std::shuffle(b.begin(), b.end(), gen);
    CHECK(composition_of(b, a) == before);
  }
}

TEST_CASE("compare_symbols follows byte order") {
  const Alphabet abc = letters("cab");
  CHECK(compare_symbols(abc, "a", "b") == std::strong_ordering::less);
  CHECK(compare_symbols(abc, "b", "b") == std::strong_ordering::equal);
  CHECK(compare_symbols(abc, "c", "a") == std::strong_ordering::greater);
  CHECK_THROWS_AS(compare_symbols(abc, "a", "z"), StegoError);
}

TEST_CASE("compare_symbols is a strict total order agreeing with byte comparison") {
  const Alphabet a({"zebra", "Zebra", "a", "ab", "abc", "\xff", "\x01", "b"});
  const auto& t = a.tokens();
  for (const auto& x : t) {
    for (const auto& y : t) {
      const auto o = compare_symbols(a, x, y);
      const int bytes = std::string_view(x).compare(y);
      CHECK((o == std::strong_ordering::less) == (bytes < 0));
      CHECK((o == std::strong_ordering::equal) == (bytes == 0));
      CHECK((o == std::strong_ordering::greater) == (bytes > 0));
      for (const auto& z : t) {
        if (o < 0 && compare_symbols(a, y, z) < 0) CHECK(compare_symbols(a, x, z) < 0);
      }
    }
  }
  // 0xff sorts after ASCII: comparison is on unsigned bytes.
  CHECK(a.tokens().back() == "\xff");
}

TEST_CASE("alphabet file ignores order and rejects duplicates") {
  std::istringstream in("c\nb\n\na\n");
  const Alphabet a = Alphabet::parse(in);
  CHECK(a.tokens() == std::vector<std::string>{"a", "b", "c"});

  std::istringstream dup("a\nb\na\n");
  try {
    (void)Alphabet::parse(dup);
    FAIL("expected DuplicateSymbol");
  } catch (const StegoError& e) {
    CHECK(e.kind() == ErrorKind::DuplicateSymbol);
  }

  std::ostringstream out;
  a.save(out);
  CHECK(out.str() == "a\nb\nc\n");
}

TEST_CASE("generated tokens sort numerically") {
  const auto t = generated_tokens(1024);
  CHECK(t.front() == "s0000");
  CHECK(t.back() == "s1023");
  CHECK(std::is_sorted(t.begin(), t.end()));
  CHECK(generated_tokens(3) == std::vector<std::string>{"a", "b", "c"});
}
