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

// Lexicographic ranking of multiset permutations.
//
// The permutation class of a block is the set of all blocks with the same
// letter counts.  Members are numbered 0 .. size-1 in lexicographic order of
// their symbol ids.  Both directions walk the block once: at each position the
// members starting with a smaller symbol c number size * count(c) / remaining,
// and the sum over all smaller symbols collapses to one multiply-divide.

#ifndef UNISTEGO_PERMUTATION_RANK_HPP
#define UNISTEGO_PERMUTATION_RANK_HPP

#include <cstddef>
#include <cstdint>
#include <span>

#include "unistego/alphabet.hpp"
#include "unistego/bigint.hpp"

namespace unistego {

/// Blocks up to this length have class sizes below 2^64 (20! < 2^63), so the
/// fixed-width routines below are exact for them.
inline constexpr std::size_t kMaxFixedWidthBlock = 20;

/// Multinomial coefficient total! / prod(count!).  Always >= 1.
BigInt class_size(const Composition& comp);

/// Rank of a block within its own class.  Throws InvalidBlockLength on an
/// empty block and UnknownSymbol if a symbol is outside the alphabet.
BigInt rank(std::span<const SymbolId> block, const Alphabet& alphabet);

/// Member of the class with the given rank.  Throws IndexOutOfRange if
/// index >= class_size(comp).
Block unrank(const Composition& comp, const BigInt& index);

// Variants used by the codec hot loop.  `comp` must be the composition of
// `block`; nothing here allocates for blocks within kMaxFixedWidthBlock.

BigInt rank(std::span<const SymbolId> block, const Composition& comp);
void unrank(const Composition& comp, const BigInt& index, std::span<SymbolId> out);

std::uint64_t class_size_u64(const Composition& comp);
std::uint64_t rank_u64(std::span<const SymbolId> block, const Composition& comp);
void unrank_u64(const Composition& comp, std::uint64_t index, std::span<SymbolId> out);

namespace detail {
// Arbitrary-precision path regardless of block length.
BigInt rank_wide(std::span<const SymbolId> block, const Composition& comp);
void unrank_wide(const Composition& comp, const BigInt& index, std::span<SymbolId> out);
}  // namespace detail

}  // namespace unistego

#endif  // UNISTEGO_PERMUTATION_RANK_HPP
