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

#include "unistego/codecs.hpp"

#include <algorithm>

#include "unistego/delta_code.hpp"
#include "unistego/errors.hpp"
#include "unistego/permutation_rank.hpp"

namespace unistego {
namespace {

void check_symbol(SymbolId s, const Alphabet& alphabet) {
  if (s >= alphabet.size())
    throw StegoError(ErrorKind::UnknownSymbol, "symbol id out of alphabet range");
}

void check_block_length(std::size_t n) {
  if (n < 2) throw StegoError(ErrorKind::InvalidBlockLength, "block length must be at least 2");
}

void record_composition(BlockTrace& t, std::span<const SymbolId> block, const Alphabet& alphabet,
                        const EmbedOptions& options) {
  if (options.trace == TraceLevel::full) t.composition.assign(block, alphabet.size());
}

// Shared driver for both schemes: whole blocks go through `step`, a trailing
// partial block is copied as is.
template <class Step>
EmbedResult embed_stream(std::span<const SymbolId> cover, std::size_t n, const Alphabet& alphabet,
                         const EmbedOptions& options, Step&& step) {
  EmbedResult result;
  result.stego.resize(cover.size());
  const std::size_t whole = cover.size() / n * n;
  if (options.trace != TraceLevel::none) result.trace.reserve(whole / n);
  for (std::size_t pos = 0; pos < whole; pos += n) {
    auto in = cover.subspan(pos, n);
    auto out = std::span<SymbolId>(result.stego).subspan(pos, n);
    BlockTrace* trace = nullptr;
    if (options.trace != TraceLevel::none) {
      trace = &result.trace.emplace_back();
      record_composition(*trace, in, alphabet, options);
    }
    const BlockOutcome o = step(in, out, trace);
    result.bits_embedded += o.genuine_bits;
    result.padding_bits += o.padding_bits;
  }
  for (std::size_t pos = whole; pos < cover.size(); ++pos) {
    check_symbol(cover[pos], alphabet);
    result.stego[pos] = cover[pos];
  }
  return result;
}

}  // namespace

// -- pair scheme -------------------------------------------------------------

BlockOutcome St2Encoder::embed_pair(std::span<const SymbolId, 2> cover,
                                    std::span<SymbolId, 2> out, BlockTrace* trace) {
  check_symbol(cover[0], alphabet_);
  check_symbol(cover[1], alphabet_);
  BlockOutcome outcome;
  if (cover[0] == cover[1]) {
    out[0] = cover[0];
    out[1] = cover[1];
    if (trace) trace->class_size = 1;
    return outcome;
  }
  bool bit;
  if (auto b = hidden_.next()) {
    bit = *b;
    outcome.genuine_bits = 1;
  } else {
    bit = padding_.bit();
    outcome.padding_bits = 1;
  }
  outcome.d = 1;
  outcome.class_log2 = 1.0;
  const SymbolId lo = std::min(cover[0], cover[1]);
  const SymbolId hi = std::max(cover[0], cover[1]);
  out[0] = bit ? hi : lo;
  out[1] = bit ? lo : hi;
  if (trace) {
    trace->class_size = 2;
    trace->d = 1;
    trace->r = bit ? 1 : 0;
    trace->tau = trace->r;
    trace->genuine_bits = outcome.genuine_bits;
    trace->padding_bits = outcome.padding_bits;
  }
  return outcome;
}

unsigned st2_extract_pair(std::span<const SymbolId, 2> stego, const Alphabet& alphabet,
                          Bits& out) {
  check_symbol(stego[0], alphabet);
  check_symbol(stego[1], alphabet);
  if (stego[0] == stego[1]) return 0;
  out.push_back(stego[0] < stego[1] ? 0 : 1);
  return 1;
}

EmbedResult st2_embed(std::span<const SymbolId> cover, BitSource& hidden,
                      const Alphabet& alphabet, Rng& padding_rng, EmbedOptions options) {
  if (options.forced_delta)
    throw StegoError(ErrorKind::Config, "the pair scheme has no payload length to force");
  St2Encoder encoder(alphabet, hidden, padding_rng);
  return embed_stream(cover, 2, alphabet, options,
                      [&](std::span<const SymbolId> in, std::span<SymbolId> out, BlockTrace* t) {
                        return encoder.embed_pair(in.first<2>(), out.first<2>(), t);
                      });
}

EmbedResult st2_embed(std::span<const SymbolId> cover, std::span<const std::uint8_t> hidden,
                      const Alphabet& alphabet, Rng& padding_rng, EmbedOptions options) {
  SpanBitSource source(hidden);
  return st2_embed(cover, source, alphabet, padding_rng, options);
}

ExtractResult st2_extract(std::span<const SymbolId> stego, const Alphabet& alphabet,
                          TraceLevel trace) {
  ExtractResult result;
  const std::size_t whole = stego.size() / 2 * 2;
  for (std::size_t pos = 0; pos < whole; pos += 2) {
    const unsigned d = st2_extract_pair(stego.subspan(pos).first<2>(), alphabet, result.bits);
    if (trace != TraceLevel::none) {
      auto& t = result.trace.emplace_back();
      t.d = d;
      if (d) t.r = t.tau = result.bits.back();
    }
  }
  for (std::size_t pos = whole; pos < stego.size(); ++pos) check_symbol(stego[pos], alphabet);
  return result;
}

// -- block scheme ------------------------------------------------------------

Block stn_encode_block(std::span<const SymbolId> cover, unsigned d, const BigInt& r,
                       const Alphabet& alphabet) {
  const Composition comp = composition_of(cover, alphabet);
  const BinaryExpansion exp(class_size(comp));
  return unrank(comp, encode_index(exp, d, r));
}

StnEncoder::StnEncoder(const Alphabet& alphabet, std::size_t block_length, BitSource& hidden,
                       Rng& delta_rng, Rng& padding_rng, std::optional<unsigned> forced_delta)
    : alphabet_(alphabet),
      n_(block_length),
      hidden_(hidden),
      delta_(delta_rng),
      padding_(padding_rng),
      forced_(forced_delta) {
  check_block_length(block_length);
}

bool StnEncoder::read_bit(BlockOutcome& outcome) {
  if (auto b = hidden_.next()) {
    ++outcome.genuine_bits;
    return *b;
  }
  ++outcome.padding_bits;
  return padding_.bit();
}

BlockOutcome StnEncoder::embed_block(std::span<const SymbolId> cover, std::span<SymbolId> out,
                                     BlockTrace* trace) {
  if (cover.size() != n_ || out.size() != n_)
    throw StegoError(ErrorKind::InvalidBlockLength, "block does not have the configured length");
  comp_.assign(cover, alphabet_.size());
  BlockOutcome outcome;

  if (n_ <= kMaxFixedWidthBlock) {
    const BinaryExpansion64 exp(class_size_u64(comp_));
    outcome.d = forced_ ? *forced_ : sample_delta(exp, delta_);
    if (outcome.d > exp.top() || !exp.bit(outcome.d))
      throw StegoError(ErrorKind::InvalidDelta, "payload length not allowed for this class size");
    std::uint64_t r = 0;
    for (unsigned i = 0; i < outcome.d; ++i) r = (r << 1) | (read_bit(outcome) ? 1u : 0u);
    const std::uint64_t tau = encode_index(exp, outcome.d, r);
    unrank_u64(comp_, tau, out);
    outcome.class_log2 = std::log2(static_cast<double>(exp.value()));
    if (trace) {
      trace->class_size = exp.value();
      trace->r = r;
      trace->tau = tau;
    }
  } else {
    const BinaryExpansion exp(class_size(comp_));
    outcome.d = forced_ ? *forced_ : sample_delta(exp, delta_);
    if (outcome.d > exp.top() || !exp.bit(outcome.d))
      throw StegoError(ErrorKind::InvalidDelta, "payload length not allowed for this class size");
    BigInt r = 0;
    for (unsigned i = 0; i < outcome.d; ++i) {
      r <<= 1;
      if (read_bit(outcome)) r |= 1;
    }
    BigInt tau = encode_index(exp, outcome.d, r);
    unrank(comp_, tau, out);
    outcome.class_log2 = log2_of(exp.value());
    if (trace) {
      trace->class_size = exp.value();
      trace->r = std::move(r);
      trace->tau = std::move(tau);
    }
  }
  if (trace) {
    trace->d = outcome.d;
    trace->genuine_bits = outcome.genuine_bits;
    trace->padding_bits = outcome.padding_bits;
    trace->forced = forced_.has_value();
  }
  return outcome;
}

StnDecoder::StnDecoder(const Alphabet& alphabet, std::size_t block_length)
    : alphabet_(alphabet), n_(block_length) {
  check_block_length(block_length);
}

unsigned StnDecoder::extract_block(std::span<const SymbolId> stego, Bits& out,
                                   ExtractTrace* trace) {
  if (stego.size() != n_)
    throw StegoError(ErrorKind::InvalidBlockLength, "block does not have the configured length");
  comp_.assign(stego, alphabet_.size());
  unsigned d;
  if (n_ <= kMaxFixedWidthBlock) {
    const BinaryExpansion64 exp(class_size_u64(comp_));
    const auto draw = decode_index(exp, rank_u64(stego, comp_));
    d = draw.d;
    for (unsigned i = d; i-- > 0;) out.push_back((draw.r >> i) & 1u);
    if (trace) *trace = {draw.d, draw.r, draw.tau};
  } else {
    const BinaryExpansion exp(class_size(comp_));
    auto draw = decode_index(exp, rank(stego, comp_));
    d = draw.d;
    for (unsigned i = d; i-- > 0;) out.push_back(test_bit(draw.r, i) ? 1 : 0);
    if (trace) *trace = {draw.d, std::move(draw.r), std::move(draw.tau)};
  }
  return d;
}

EmbedResult stn_embed(std::span<const SymbolId> cover, BitSource& hidden, std::size_t n,
                      const Alphabet& alphabet, Rng& delta_rng, Rng& padding_rng,
                      EmbedOptions options) {
  StnEncoder encoder(alphabet, n, hidden, delta_rng, padding_rng, options.forced_delta);
  return embed_stream(cover, n, alphabet, options,
                      [&](std::span<const SymbolId> in, std::span<SymbolId> out, BlockTrace* t) {
                        return encoder.embed_block(in, out, t);
                      });
}

EmbedResult stn_embed(std::span<const SymbolId> cover, std::span<const std::uint8_t> hidden,
                      std::size_t n, const Alphabet& alphabet, Rng& delta_rng,
                      Rng& padding_rng, EmbedOptions options) {
  SpanBitSource source(hidden);
  return stn_embed(cover, source, n, alphabet, delta_rng, padding_rng, options);
}

ExtractResult stn_extract(std::span<const SymbolId> stego, std::size_t n,
                          const Alphabet& alphabet, TraceLevel trace) {
  StnDecoder decoder(alphabet, n);
  ExtractResult result;
  const std::size_t whole = stego.size() / n * n;
  for (std::size_t pos = 0; pos < whole; pos += n) {
    ExtractTrace* t = trace != TraceLevel::none ? &result.trace.emplace_back() : nullptr;
    decoder.extract_block(stego.subspan(pos, n), result.bits, t);
  }
  for (std::size_t pos = whole; pos < stego.size(); ++pos) check_symbol(stego[pos], alphabet);
  return result;
}

}  // namespace unistego
