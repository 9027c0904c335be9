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

#include "unistego/bit_stream.hpp"

#include <cctype>
#include <limits>

#include "unistego/errors.hpp"

namespace unistego {

Bits bytes_to_bits(std::span<const std::uint8_t> bytes) {
  Bits bits;
  bits.reserve(bytes.size() * 8);
  for (std::uint8_t b : bytes) {
    for (int i = 7; i >= 0; --i) bits.push_back((b >> i) & 1u);
  }
  return bits;
}

std::vector<std::uint8_t> bits_to_bytes(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  }
  return bytes;
}

Bits parse_bit_text(std::string_view text) {
  Bits bits;
  for (char c : text) {
    if (c == '0' || c == '1')
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    else if (!std::isspace(static_cast<unsigned char>(c)))
      throw StegoError(ErrorKind::Config, "bit text may contain only '0', '1' and whitespace");
  }
  return bits;
}

std::string to_bit_text(std::span<const std::uint8_t> bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b ? '1' : '0');
  return out;
}

Bits frame_payload(std::span<const std::uint8_t> payload) {
  if (payload.size() > std::numeric_limits<std::uint32_t>::max())
    throw StegoError(ErrorKind::Config, "payload too large for a 32-bit length prefix");
  const auto len = static_cast<std::uint32_t>(payload.size());
  std::vector<std::uint8_t> framed{static_cast<std::uint8_t>(len >> 24),
                                   static_cast<std::uint8_t>(len >> 16),
                                   static_cast<std::uint8_t>(len >> 8),
                                   static_cast<std::uint8_t>(len)};
  framed.insert(framed.end(), payload.begin(), payload.end());
  return bytes_to_bits(framed);
}

std::optional<std::vector<std::uint8_t>> unframe_payload(std::span<const std::uint8_t> bits) {
  if (bits.size() < 32) return std::nullopt;
  std::uint64_t len = 0;
  for (std::size_t i = 0; i < 32; ++i) len = (len << 1) | (bits[i] & 1u);
  if (bits.size() - 32 < len * 8) return std::nullopt;
  auto bytes = bits_to_bytes(bits.subspan(32, len * 8));
  return bytes;
}

}  // namespace unistego
