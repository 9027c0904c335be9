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

#include "unistego/permutation_rank.hpp"

#include <algorithm>

#include <boost/container/small_vector.hpp>

#include "unistego/errors.hpp"

namespace unistego {
namespace {

__extension__ typedef unsigned __int128 uint128_t;

using Counts = boost::container::small_vector<std::uint32_t, kMaxFixedWidthBlock>;

// Int holds sizes and ranks; Wide holds Int * block_length without overflow.
template <class Int>
struct WideOf;
template <>
struct WideOf<std::uint64_t> {
  using type = uint128_t;
};
template <>
struct WideOf<BigInt> {
  using type = BigInt;
};

template <class Int>
Int mul_div(const Int& a, std::uint64_t mul, std::uint64_t div) {
  using Wide = typename WideOf<Int>::type;
  return static_cast<Int>(Wide(a) * mul / div);
}

template <class Int>
Int class_size_impl(const Composition& comp) {
  Int size = 1;
  std::uint64_t len = 0;
  for (const auto& e : comp.entries()) {
    for (std::uint32_t j = 1; j <= e.count; ++j) {
      ++len;
      size = mul_div(size, len, j);
    }
  }
  return size;
}

Counts counts_of(const Composition& comp) {
  Counts counts;
  for (const auto& e : comp.entries()) counts.push_back(e.count);
  return counts;
}

std::size_t entry_of(const Composition& comp, SymbolId s) {
  const auto entries = comp.entries();
  auto it = std::lower_bound(entries.begin(), entries.end(), s,
                             [](const Composition::Entry& e, SymbolId v) { return e.symbol < v; });
  if (it == entries.end() || it->symbol != s)
    throw StegoError(ErrorKind::UnknownSymbol, "block is not a member of the permutation class");
  return static_cast<std::size_t>(it - entries.begin());
}

template <class Int>
Int rank_impl(std::span<const SymbolId> block, const Composition& comp) {
  if (block.size() != comp.total())
    throw StegoError(ErrorKind::InvalidBlockLength, "block length differs from composition total");
  Counts counts = counts_of(comp);
  Int size = class_size_impl<Int>(comp);
  Int result = 0;
  std::uint64_t len = block.size();
  for (SymbolId s : block) {
    const std::size_t j = entry_of(comp, s);
    if (counts[j] == 0)
      throw StegoError(ErrorKind::UnknownSymbol, "block is not a member of the permutation class");
    std::uint64_t less = 0;
    for (std::size_t e = 0; e < j; ++e) less += counts[e];
    if (less != 0) result += mul_div(size, less, len);
    size = mul_div(size, counts[j], len);
    --counts[j];
    --len;
  }
  return result;
}

template <class Int>
std::uint64_t quotient(const Int& idx, std::uint64_t len, const Int& size) {
  using Wide = typename WideOf<Int>::type;
  const Wide q = Wide(idx) * len / Wide(size);
  if constexpr (std::is_same_v<Int, BigInt>)
    return q.template convert_to<std::uint64_t>();
  else
    return static_cast<std::uint64_t>(q);
}

template <class Int>
void unrank_impl(const Composition& comp, Int index, std::span<SymbolId> out) {
  if (out.size() != comp.total())
    throw StegoError(ErrorKind::InvalidBlockLength, "output length differs from composition total");
  Int size = class_size_impl<Int>(comp);
  if (index >= size)
    throw StegoError(ErrorKind::IndexOutOfRange, "index exceeds permutation class size");
  Counts counts = counts_of(comp);
  const auto entries = comp.entries();
  std::uint64_t len = out.size();
  for (auto& slot : out) {
    // Members starting with entry j occupy [size*prefix_j/len, size*(prefix_j+count_j)/len).
    const std::uint64_t q = quotient(index, len, size);
    std::uint64_t prefix = 0;
    std::size_t j = 0;
    while (q >= prefix + counts[j]) prefix += counts[j++];
    if (prefix != 0) index -= mul_div(size, prefix, len);
    size = mul_div(size, counts[j], len);
    --counts[j];
    --len;
    slot = entries[j].symbol;
  }
}

void require_fixed_width(const Composition& comp) {
  if (comp.total() > kMaxFixedWidthBlock)
    throw StegoError(ErrorKind::InvalidBlockLength, "block too long for the 64-bit ranking path");
}

}  // namespace

BigInt class_size(const Composition& comp) { return class_size_impl<BigInt>(comp); }

BigInt rank(std::span<const SymbolId> block, const Alphabet& alphabet) {
  if (block.empty()) throw StegoError(ErrorKind::InvalidBlockLength, "cannot rank an empty block");
  const Composition comp = composition_of(block, alphabet);
  return rank(block, comp);
}

BigInt rank(std::span<const SymbolId> block, const Composition& comp) {
  if (comp.total() <= kMaxFixedWidthBlock) return rank_impl<std::uint64_t>(block, comp);
  return rank_impl<BigInt>(block, comp);
}

Block unrank(const Composition& comp, const BigInt& index) {
  Block out(comp.total());
  unrank(comp, index, out);
  return out;
}

void unrank(const Composition& comp, const BigInt& index, std::span<SymbolId> out) {
  if (index < 0) throw StegoError(ErrorKind::IndexOutOfRange, "negative class index");
  if (comp.total() <= kMaxFixedWidthBlock) {
    if (bit_length(index) > 64)
      throw StegoError(ErrorKind::IndexOutOfRange, "index exceeds permutation class size");
    unrank_impl<std::uint64_t>(comp, index.convert_to<std::uint64_t>(), out);
    return;
  }
  unrank_impl<BigInt>(comp, index, out);
}

std::uint64_t class_size_u64(const Composition& comp) {
  require_fixed_width(comp);
  return class_size_impl<std::uint64_t>(comp);
}

std::uint64_t rank_u64(std::span<const SymbolId> block, const Composition& comp) {
  require_fixed_width(comp);
  return rank_impl<std::uint64_t>(block, comp);
}

void unrank_u64(const Composition& comp, std::uint64_t index, std::span<SymbolId> out) {
  require_fixed_width(comp);
  unrank_impl<std::uint64_t>(comp, index, out);
}

namespace detail {
// Exposed for tests that cross-check the two integer paths.
BigInt rank_wide(std::span<const SymbolId> block, const Composition& comp) {
  return rank_impl<BigInt>(block, comp);
}
void unrank_wide(const Composition& comp, const BigInt& index, std::span<SymbolId> out) {
  unrank_impl<BigInt>(comp, index, out);
}
}  // namespace detail

}  // namespace unistego
