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

// Randomized payload length for a class of N equiprobable codewords.
//
// Write N = sum of 2^i over its set bits.  A block carries d payload bits with
// probability 2^d / N for each set bit d.  The 2^d payload values r map to the
// codeword indices [offset(d), offset(d) + 2^d), where offset(d) is N with
// bits 0..d cleared.  The segments tile [0, N), so a uniform payload makes the
// emitted index uniform, and the receiver recovers d as the highest bit in
// which the index differs from N.

#ifndef UNISTEGO_DELTA_CODE_HPP
#define UNISTEGO_DELTA_CODE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "unistego/bigint.hpp"
#include "unistego/errors.hpp"
#include "unistego/random.hpp"

namespace unistego {

template <class Int>
class BasicBinaryExpansion {
 public:
  explicit BasicBinaryExpansion(Int value) : value_(std::move(value)) {
    if (value_ < 1) throw StegoError(ErrorKind::NonPositive, "class size must be >= 1");
    top_ = bit_length(value_) - 1;
  }

  const Int& value() const noexcept { return value_; }
  /// Index of the leading one bit, floor(log2 N).
  unsigned top() const noexcept { return top_; }
  bool bit(unsigned i) const { return test_bit(value_, i); }
  bool is_power_of_two() const { return low_bits(value_, top_) == 0; }

  /// Digits from bit top() down to bit 0.
  std::vector<std::uint8_t> digits() const {
    std::vector<std::uint8_t> out;
    out.reserve(top_ + 1);
    for (unsigned i = top_ + 1; i-- > 0;) out.push_back(bit(i) ? 1 : 0);
    return out;
  }

  /// Sum of the set bits strictly above d: the first index used by length d.
  Int offset(unsigned d) const { return clear_low_bits(value_, d + 1); }

 private:
  Int value_;
  unsigned top_ = 0;
};

using BinaryExpansion = BasicBinaryExpansion<BigInt>;
using BinaryExpansion64 = BasicBinaryExpansion<std::uint64_t>;

inline BinaryExpansion expand(const BigInt& n) { return BinaryExpansion(n); }

template <class Int>
struct BasicDeltaDraw {
  unsigned d = 0;
  Int r{};
  Int tau{};
};
using DeltaDraw = BasicDeltaDraw<BigInt>;

struct DeltaProbability {
  unsigned delta;
  Rational probability;
};

/// Probability of every length 0..top(), highest first; zero where the bit
/// of N is clear.  The entries sum to exactly 1.
std::vector<DeltaProbability> delta_probabilities(const BinaryExpansion& exp);

/// Expected payload length in bits, sum of d * 2^d over set bits, over N.
Rational expected_payload_bits(const BinaryExpansion& exp);

/// Draws a payload length.  When N is a power of two the length is forced and
/// no randomness is consumed; otherwise one uniform index in [0, N) is drawn
/// and its segment gives the length.
template <class Int>
unsigned sample_delta(const BasicBinaryExpansion<Int>& exp, Rng& rng) {
  if (exp.is_power_of_two()) return exp.top();
  const Int t = rng.uniform(exp.value());
  return bit_length(Int(exp.value() ^ t)) - 1;
}

template <class Int>
Int encode_index(const BasicBinaryExpansion<Int>& exp, unsigned d, const Int& r) {
  if (d > exp.top() || !exp.bit(d))
    throw StegoError(ErrorKind::InvalidDelta, "payload length not allowed for this class size");
  if (is_negative(r) || bit_length(r) > d)
    throw StegoError(ErrorKind::PayloadOutOfRange, "payload value needs more than d bits");
  return exp.offset(d) + r;
}

template <class Int>
BasicDeltaDraw<Int> decode_index(const BasicBinaryExpansion<Int>& exp, const Int& tau) {
  if (is_negative(tau) || tau >= exp.value())
    throw StegoError(ErrorKind::IndexOutOfRange, "codeword index exceeds class size");
  const unsigned d = bit_length(Int(exp.value() ^ tau)) - 1;
  return {d, low_bits(tau, d), tau};
}

}  // namespace unistego

#endif  // UNISTEGO_DELTA_CODE_HPP
