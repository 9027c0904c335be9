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
#include "unistego/codecs.hpp"
#include "unistego/errors.hpp"
#include "unistego/sources.hpp"

using namespace unistego;
using namespace unistego::testing;

namespace {

// Bits the padding generator with this seed hands out, in order.
Bits padding_stream(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  Bits out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(rng.bit() ? 1 : 0);
  return out;
}

}  // namespace

TEST_CASE("pair scheme reproduces the worked example") {
  const Alphabet ab = letters("ab");
  Rng padding(1);
  const Bits hidden = bits("01100");
  const auto result = st2_embed(ids(ab, "aababaaaabbaaaaabb"), hidden, ab, padding);
  CHECK(text(ab, result.stego) == "aaabbaaabaabaaaabb");
  CHECK(result.bits_embedded == 4);
  CHECK(result.padding_bits == 0);

  const auto back = st2_extract(result.stego, ab);
  CHECK(to_bit_text(back.bits) == "0110");
}

TEST_CASE("pair scheme small cases") {
  const Alphabet ab = letters("ab");
  Rng padding(1);
  const Bits one = bits("1"), zero = bits("0");
  auto same = st2_embed(ids(ab, "aaaa"), one, ab, padding);
  CHECK(text(ab, same.stego) == "aaaa");
  CHECK(same.bits_embedded == 0);

  auto flip = st2_embed(ids(ab, "ba"), zero, ab, padding);
  CHECK(text(ab, flip.stego) == "ab");
  CHECK(flip.bits_embedded == 1);

  CHECK(st2_extract(ids(ab, "aabb"), ab).bits.empty());
  const Alphabet abc = letters("abc");
  CHECK(to_bit_text(st2_extract(ids(abc, "cb"), abc).bits) == "1");

  // Odd trailing symbol passes through and carries nothing.
  auto odd = st2_embed(ids(ab, "bab"), zero, ab, padding);
  CHECK(text(ab, odd.stego) == "abb");
  CHECK(st2_extract(odd.stego, ab).bits == zero);
}

TEST_CASE("pair scheme pads with fair bits once the message runs out") {
  const Alphabet ab = letters("ab");
  Rng padding(42);
  const Bits hidden = bits("1");
  const auto result = st2_embed(ids(ab, "abbaabab"), hidden, ab, padding);
  CHECK(result.bits_embedded == 1);
  CHECK(result.padding_bits == 3);
  Bits expected = hidden;
  const Bits pad = padding_stream(42, 3);
  expected.insert(expected.end(), pad.begin(), pad.end());
  CHECK(st2_extract(result.stego, ab).bits == expected);
}

TEST_CASE("block scheme reproduces the worked example") {
  const Alphabet abc = letters("abc");
  Rng delta(1), padding(2);
  const Bits hidden = bits("0");
  EmbedOptions options;
  options.forced_delta = 1;
  const auto result = stn_embed(ids(abc, "bac"), hidden, 3, abc, delta, padding, options);
  CHECK(text(abc, result.stego) == "cab");
  CHECK(result.bits_embedded == 1);
  REQUIRE(result.trace.size() == 1);
  CHECK(result.trace[0].class_size == 6);
  CHECK(result.trace[0].d == 1);
  CHECK(result.trace[0].r == 0);
  CHECK(result.trace[0].tau == 4);
  CHECK(result.trace[0].forced);

  const auto back = stn_extract(result.stego, 3, abc);
  CHECK(to_bit_text(back.bits) == "0");
  REQUIRE(back.trace.size() == 1);
  CHECK(back.trace[0].tau == 4);
  CHECK(back.trace[0].d == 1);
  CHECK(back.trace[0].r == 0);
}

TEST_CASE("block scheme leaves single-arrangement classes alone") {
  const Alphabet abc = letters("abc");
  Rng delta(1), padding(2);
  const Bits hidden = bits("1111");
  const auto result = stn_embed(ids(abc, "aaa"), hidden, 3, abc, delta, padding);
  CHECK(text(abc, result.stego) == "aaa");
  CHECK(result.bits_embedded == 0);
  CHECK(stn_extract(ids(abc, "aaa"), 3, abc).bits.empty());
}

TEST_CASE("block scheme errors") {
  const Alphabet abc = letters("abc");
  Rng delta(1), padding(2);
  const Bits hidden;
  try {
    (void)stn_embed(ids(abc, "abab"), hidden, 1, abc, delta, padding);
    FAIL("expected InvalidBlockLength");
  } catch (const StegoError& e) {
    CHECK(e.kind() == ErrorKind::InvalidBlockLength);
  }
  CHECK_THROWS_AS((void)stn_extract(ids(abc, "ab"), 1, abc), StegoError);
  try {
    (void)stn_embed(Block{0, 1, 5}, hidden, 3, abc, delta, padding);
    FAIL("expected UnknownSymbol");
  } catch (const StegoError& e) {
    CHECK(e.kind() == ErrorKind::UnknownSymbol);
  }
  // Trailing symbols are validated too.
  CHECK_THROWS_AS((void)stn_embed(Block{0, 1, 2, 9}, hidden, 3, abc, delta, padding), StegoError);
  EmbedOptions forced;
  forced.forced_delta = 0;  // 6 = 110b has no zero-length segment
  try {
    (void)stn_embed(ids(abc, "bac"), hidden, 3, abc, delta, padding, forced);
    FAIL("expected InvalidDelta");
  } catch (const StegoError& e) {
    CHECK(e.kind() == ErrorKind::InvalidDelta);
  }
}

TEST_CASE("block scheme round trip, type and length preservation") {
  std::mt19937_64 gen(123);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t k = 2 + gen() % 6;
    const std::size_t n = trial % 50 == 0 ? 21 + gen() % 15 : 2 + gen() % 9;
    const Alphabet a(generated_tokens(k));
    Block cover(gen() % 80);
    for (auto& s : cover) s = static_cast<SymbolId>(gen() % (trial % 3 == 0 ? 2 : k));
    Bits hidden(gen() % 60);
    for (auto& b : hidden) b = gen() & 1;
    const std::uint64_t pad_seed = gen();
    Rng delta(gen()), padding(pad_seed);
    const auto result = stn_embed(cover, hidden, n, a, delta, padding);

    REQUIRE(result.stego.size() == cover.size());
    std::uint64_t total_d = 0;
    for (const auto& t : result.trace) total_d += t.d;
    REQUIRE(result.bits_embedded + result.padding_bits == total_d);
    for (std::size_t pos = 0; pos + n <= cover.size(); pos += n) {
      const std::span<const SymbolId> in(cover.data() + pos, n), out(result.stego.data() + pos, n);
      REQUIRE(composition_of(in, a) == composition_of(out, a));
    }
    for (std::size_t pos = cover.size() / n * n; pos < cover.size(); ++pos)
      REQUIRE(result.stego[pos] == cover[pos]);

    Bits expected(hidden.begin(), hidden.begin() + result.bits_embedded);
    const Bits pad = padding_stream(pad_seed, result.padding_bits);
    expected.insert(expected.end(), pad.begin(), pad.end());
    REQUIRE(stn_extract(result.stego, n, a).bits == expected);
  }
}

TEST_CASE("block length two coincides with the pair scheme") {
  const Alphabet abc = letters("abc");
  std::vector<Bits> prefixes;
  for (std::size_t len = 0; len <= 4; ++len)
    for (std::uint32_t v = 0; v < (1u << len); ++v) {
      Bits b(len);
      for (std::size_t i = 0; i < len; ++i) b[i] = (v >> (len - 1 - i)) & 1;
      prefixes.push_back(b);
    }
  std::size_t compared = 0;
  for (std::size_t len = 0; len <= 8; ++len) {
    for (const Block& cover : all_blocks(3, len)) {
      for (const Bits& hidden : prefixes) {
        Rng pair_pad(5), block_pad(5), delta(6), delta_fresh(6);
        const auto pair = st2_embed(cover, hidden, abc, pair_pad);
        const auto block = stn_embed(cover, hidden, 2, abc, delta, block_pad);
        REQUIRE(pair.stego == block.stego);
        REQUIRE(pair.bits_embedded == block.bits_embedded);
        REQUIRE(pair.padding_bits == block.padding_bits);
        REQUIRE(delta.next() == delta_fresh.next());
        ++compared;
      }
    }
  }
  CHECK(compared > 9000 * 31);
}

TEST_CASE("streaming encoder matches the whole-stream call") {
  const SourceModel model = SourceModel::uniform(5);
  Rng src(8);
  const auto cover = draw_cover(model, 4000, src);
  Rng d1(1), p1(2), d2(1), p2(2);
  RandomBitSource h1(3), h2(3);
  const auto whole = stn_embed(cover, h1, 7, model.alphabet(), d1, p1);

  StnEncoder encoder(model.alphabet(), 7, h2, d2, p2);
  Block streamed(cover.size());
  for (std::size_t pos = 0; pos + 7 <= cover.size(); pos += 7)
    encoder.embed_block(std::span(cover).subspan(pos, 7), std::span(streamed).subspan(pos, 7));
  for (std::size_t pos = cover.size() / 7 * 7; pos < cover.size(); ++pos) streamed[pos] = cover[pos];
  CHECK(streamed == whole.stego);
}

TEST_CASE("full trace records compositions") {
  const Alphabet abc = letters("abc");
  Rng delta(1), padding(2);
  const Bits hidden = bits("0101");
  EmbedOptions options;
  options.trace = TraceLevel::full;
  const auto result = stn_embed(ids(abc, "bacaab"), hidden, 3, abc, delta, padding, options);
  REQUIRE(result.trace.size() == 2);
  CHECK(result.trace[0].composition.dense() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(result.trace[1].composition.dense() == std::vector<std::uint32_t>{2, 1, 0});
  options.trace = TraceLevel::none;
  Rng d2(1), p2(2);
  CHECK(stn_embed(ids(abc, "bacaab"), hidden, 3, abc, d2, p2, options).trace.empty());
}
