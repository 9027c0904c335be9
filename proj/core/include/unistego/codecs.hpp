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

// Embedding hidden bits into i.i.d. cover symbols.
//
// Both schemes replace each cover block by another arrangement of the same
// letters.  Under an i.i.d. source all arrangements are equally likely, so if
// the hidden bits are uniform the output has exactly the law of the cover.
//
//   Pair scheme:  blocks of two.  Equal letters pass through; a pair of
//                 distinct letters carries one bit in its order (ascending
//                 for 0, descending for 1).
//   Block scheme: blocks of n.  The block's permutation class of size N is
//                 indexed lexicographically; a random payload length d is
//                 drawn (see delta_code.hpp), d hidden bits are read most
//                 significant first, and the class member at the resulting
//                 index is emitted.
//
// When the hidden stream runs dry the encoders continue with fair padding bits
// from a separate generator, which keeps the output law intact.  A trailing
// partial block is copied unchanged.  Decoding never needs the sender's
// randomness: only the alphabet and the block length are shared.

#ifndef UNISTEGO_CODECS_HPP
#define UNISTEGO_CODECS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "unistego/alphabet.hpp"
#include "unistego/bigint.hpp"
#include "unistego/bit_stream.hpp"
#include "unistego/random.hpp"

namespace unistego {

enum class TraceLevel {
  none,    // no per-block records
  blocks,  // class size, d, r, tau and bit accounting
  full,    // additionally the composition of every block
};

struct BlockTrace {
  Composition composition;  // only with TraceLevel::full
  BigInt class_size;
  unsigned d = 0;
  BigInt r;
  BigInt tau;
  unsigned genuine_bits = 0;
  unsigned padding_bits = 0;
  bool forced = false;  // d came from EmbedOptions::forced_delta
};

struct EmbedOptions {
  TraceLevel trace = TraceLevel::blocks;
  /// Test hook: use this payload length for every block instead of drawing
  /// one.  Blocks whose class size does not allow it raise InvalidDelta.
  std::optional<unsigned> forced_delta;
};

struct EmbedResult {
  std::vector<SymbolId> stego;
  std::uint64_t bits_embedded = 0;  // taken from the hidden stream
  std::uint64_t padding_bits = 0;   // taken from the padding generator
  std::vector<BlockTrace> trace;
};

struct ExtractTrace {
  unsigned d = 0;
  BigInt r;
  BigInt tau;
};

struct ExtractResult {
  Bits bits;
  std::vector<ExtractTrace> trace;
};

/// Cheap per-block summary returned by the streaming encoders.
struct BlockOutcome {
  unsigned d = 0;
  unsigned genuine_bits = 0;
  unsigned padding_bits = 0;
  double class_log2 = 0.0;
};

// -- pair scheme -------------------------------------------------------------

class St2Encoder {
 public:
  St2Encoder(const Alphabet& alphabet, BitSource& hidden, Rng& padding_rng)
      : alphabet_(alphabet), hidden_(hidden), padding_(padding_rng) {}

  BlockOutcome embed_pair(std::span<const SymbolId, 2> cover, std::span<SymbolId, 2> out,
                          BlockTrace* trace = nullptr);

 private:
  const Alphabet& alphabet_;
  BitSource& hidden_;
  Rng& padding_;
};

/// Appends the bit carried by a pair (nothing for equal letters); returns the
/// number of bits appended.
unsigned st2_extract_pair(std::span<const SymbolId, 2> stego, const Alphabet& alphabet,
                          Bits& out);

EmbedResult st2_embed(std::span<const SymbolId> cover, BitSource& hidden,
                      const Alphabet& alphabet, Rng& padding_rng, EmbedOptions options = {});
EmbedResult st2_embed(std::span<const SymbolId> cover, std::span<const std::uint8_t> hidden,
                      const Alphabet& alphabet, Rng& padding_rng, EmbedOptions options = {});
ExtractResult st2_extract(std::span<const SymbolId> stego, const Alphabet& alphabet,
                          TraceLevel trace = TraceLevel::blocks);

// -- block scheme ------------------------------------------------------------

/// The deterministic core of the block scheme: the member of the cover
/// block's class at index offset(d) + r.  Throws InvalidDelta or
/// PayloadOutOfRange for (d, r) not allowed by the class size.
Block stn_encode_block(std::span<const SymbolId> cover, unsigned d, const BigInt& r,
                       const Alphabet& alphabet);

class StnEncoder {
 public:
  /// Throws InvalidBlockLength if block_length < 2.
  StnEncoder(const Alphabet& alphabet, std::size_t block_length, BitSource& hidden,
             Rng& delta_rng, Rng& padding_rng, std::optional<unsigned> forced_delta = {});

  std::size_t block_length() const noexcept { return n_; }

  /// `cover` and `out` must both hold block_length() symbols.
  BlockOutcome embed_block(std::span<const SymbolId> cover, std::span<SymbolId> out,
                           BlockTrace* trace = nullptr);

 private:
  bool read_bit(BlockOutcome& outcome);

  const Alphabet& alphabet_;
  std::size_t n_;
  BitSource& hidden_;
  Rng& delta_;
  Rng& padding_;
  std::optional<unsigned> forced_;
  Composition comp_;
};

class StnDecoder {
 public:
  StnDecoder(const Alphabet& alphabet, std::size_t block_length);

  std::size_t block_length() const noexcept { return n_; }

  /// Appends the block's payload bits to `out`; returns how many.
  unsigned extract_block(std::span<const SymbolId> stego, Bits& out,
                         ExtractTrace* trace = nullptr);

 private:
  const Alphabet& alphabet_;
  std::size_t n_;
  Composition comp_;
};

EmbedResult stn_embed(std::span<const SymbolId> cover, BitSource& hidden, std::size_t n,
                      const Alphabet& alphabet, Rng& delta_rng, Rng& padding_rng,
                      EmbedOptions options = {});
EmbedResult stn_embed(std::span<const SymbolId> cover, std::span<const std::uint8_t> hidden,
                      std::size_t n, const Alphabet& alphabet, Rng& delta_rng,
                      Rng& padding_rng, EmbedOptions options = {});
ExtractResult stn_extract(std::span<const SymbolId> stego, std::size_t n,
                          const Alphabet& alphabet, TraceLevel trace = TraceLevel::blocks);

}  // namespace unistego

#endif  // UNISTEGO_CODECS_HPP
