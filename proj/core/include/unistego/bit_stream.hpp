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

#ifndef UNISTEGO_BIT_STREAM_HPP
#define UNISTEGO_BIT_STREAM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unistego/random.hpp"

namespace unistego {

/// One bit per element, each 0 or 1.
using Bits = std::vector<std::uint8_t>;

/// Pull interface for hidden bits; an empty optional means exhausted.
class BitSource {
 public:
  virtual ~BitSource() = default;
  virtual std::optional<bool> next() = 0;
};

/// Finite hidden message held by the caller.
class SpanBitSource final : public BitSource {
 public:
  explicit SpanBitSource(std::span<const std::uint8_t> bits) : bits_(bits) {}
  std::optional<bool> next() override {
    if (pos_ == bits_.size()) return std::nullopt;
    return bits_[pos_++] != 0;
  }
  std::size_t consumed() const noexcept { return pos_; }

 private:
  std::span<const std::uint8_t> bits_;
  std::size_t pos_ = 0;
};

/// Endless fair coin flips; the same seed yields the same bits as
/// draw_hidden_bits.
class RandomBitSource final : public BitSource {
 public:
  explicit RandomBitSource(std::uint64_t seed) : rng_(seed) {}
  std::optional<bool> next() override { return rng_.bit(); }

 private:
  Rng rng_;
};

/// Bytes to bits, most significant bit of each byte first.
Bits bytes_to_bits(std::span<const std::uint8_t> bytes);
/// Inverse of bytes_to_bits; a trailing partial byte is zero-filled.
std::vector<std::uint8_t> bits_to_bytes(std::span<const std::uint8_t> bits);

/// Text form: '0' and '1' characters, whitespace ignored.
Bits parse_bit_text(std::string_view text);
std::string to_bit_text(std::span<const std::uint8_t> bits);

/// Prepends the payload length in bytes as a 32-bit big-endian integer.
///
/// The codecs are only indistinguishable from cover traffic when every hidden
/// bit is uniform.  A plaintext length prefix is not, so encrypt the framed
/// payload as a whole before embedding it.
Bits frame_payload(std::span<const std::uint8_t> payload);

/// Reads the length prefix and returns that many bytes, or nothing if the
/// bits are too short to hold the prefix or the announced payload.
std::optional<std::vector<std::uint8_t>> unframe_payload(std::span<const std::uint8_t> bits);

}  // namespace unistego

#endif  // UNISTEGO_BIT_STREAM_HPP
