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

#ifndef UNISTEGO_BIGINT_HPP
#define UNISTEGO_BIGINT_HPP

#include <bit>
#include <cmath>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace unistego {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Uniform bit helpers over the two integer widths used by the codec.  The
// fixed-width path is taken whenever a class size is known to fit in 64 bits.

inline unsigned bit_length(std::uint64_t v) noexcept {
  return static_cast<unsigned>(std::bit_width(v));
}
inline unsigned bit_length(const BigInt& v) {
  return v.is_zero() ? 0u : static_cast<unsigned>(boost::multiprecision::msb(v)) + 1u;
}

inline bool test_bit(std::uint64_t v, unsigned i) noexcept {
  return i < 64 && ((v >> i) & 1u) != 0;
}
inline bool test_bit(const BigInt& v, unsigned i) {
  return boost::multiprecision::bit_test(v, i);
}

inline bool is_negative(std::uint64_t) noexcept { return false; }
inline bool is_negative(const BigInt& v) { return v.sign() < 0; }

/// v with bits [0, k) cleared.
inline std::uint64_t clear_low_bits(std::uint64_t v, unsigned k) noexcept {
  return k >= 64 ? 0 : (v >> k) << k;
}
inline BigInt clear_low_bits(const BigInt& v, unsigned k) { return (v >> k) << k; }

/// v restricted to bits [0, k).
inline std::uint64_t low_bits(std::uint64_t v, unsigned k) noexcept {
  return k >= 64 ? v : v & ((std::uint64_t{1} << k) - 1);
}
inline BigInt low_bits(const BigInt& v, unsigned k) {
  return v & ((BigInt{1} << k) - 1);
}

/// log2 of a positive integer as a double; exact enough for rate statistics.
inline double log2_of(const BigInt& v) {
  const unsigned bits = bit_length(v);
  if (bits <= 53) return std::log2(v.convert_to<double>());
  const unsigned shift = bits - 53;
  return std::log2(static_cast<BigInt>(v >> shift).convert_to<double>()) + shift;
}

}  // namespace unistego

#endif  // UNISTEGO_BIGINT_HPP
