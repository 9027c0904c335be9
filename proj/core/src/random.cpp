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

#include "unistego/random.hpp"

#include <bit>

#include "unistego/errors.hpp"

namespace unistego {

std::uint64_t Rng::uniform(std::uint64_t bound) {
  if (bound == 0) throw StegoError(ErrorKind::NonPositive, "uniform bound must be positive");
  if (bound == 1) return 0;
  const unsigned bits = bit_length(bound - 1);
  const std::uint64_t mask = bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  for (;;) {
    const std::uint64_t x = next() & mask;
    if (x < bound) return x;
  }
}

BigInt Rng::uniform(const BigInt& bound) {
  if (bound <= 0) throw StegoError(ErrorKind::NonPositive, "uniform bound must be positive");
  if (bit_length(bound) <= 64) return BigInt(uniform(bound.convert_to<std::uint64_t>()));
  const unsigned bits = bit_length(BigInt(bound - 1));
  const unsigned words = (bits + 63) / 64;
  for (;;) {
    BigInt x = 0;
    for (unsigned w = 0; w < words; ++w) {
      x <<= 64;
      x |= next();
    }
    x = low_bits(x, bits);
    if (x < bound) return x;
  }
}

}  // namespace unistego
