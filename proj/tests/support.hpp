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

// Helpers and brute-force oracles shared by the test binaries.  Nothing here
// calls into the ranking or delta-code implementations it is used to check.

#ifndef UNISTEGO_TESTS_SUPPORT_HPP
#define UNISTEGO_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unistego/alphabet.hpp"
#include "unistego/bigint.hpp"
#include "unistego/bit_stream.hpp"

namespace unistego::testing {

inline Alphabet letters(std::string_view chars) {
  std::vector<std::string> tokens;
  for (char c : chars) tokens.emplace_back(1, c);
  return Alphabet(std::move(tokens));
}

/// Single-character tokens to ids.
inline Block ids(const Alphabet& alphabet, std::string_view text) {
  Block out;
  for (char c : text) out.push_back(alphabet.index_of(std::string(1, c)));
  return out;
}

inline std::string text(const Alphabet& alphabet, const Block& block) {
  std::string out;
  for (SymbolId s : block) out += alphabet.token(s);
  return out;
}

inline Bits bits(std::string_view s) { return parse_bit_text(s); }

/// All distinct arrangements of a block in lexicographic order, by
/// std::next_permutation from the sorted block.
inline std::vector<Block> brute_force_class(Block block) {
  std::sort(block.begin(), block.end());
  std::vector<Block> members;
  do members.push_back(block);
  while (std::next_permutation(block.begin(), block.end()));
  return members;
}

/// Every block of length n over k symbols, in lexicographic order.
inline std::vector<Block> all_blocks(std::size_t k, std::size_t n) {
  std::vector<Block> out;
  Block b(n, 0);
  for (;;) {
    out.push_back(b);
    std::size_t i = n;
    while (i > 0 && b[i - 1] + 1 == k) b[--i] = 0;
    if (i == 0) break;
    ++b[i - 1];
  }
  return out;
}

/// Literal offset formula: sum over l = d+1 .. m of bit_l(N) * 2^l.
inline BigInt literal_offset(const BigInt& n, unsigned d) {
  BigInt sum = 0;
  const unsigned m = bit_length(n) - 1;
  for (unsigned l = d + 1; l <= m; ++l)
    if (test_bit(n, l)) sum += BigInt(1) << l;
  return sum;
}

}  // namespace unistego::testing

#endif  // UNISTEGO_TESTS_SUPPORT_HPP
