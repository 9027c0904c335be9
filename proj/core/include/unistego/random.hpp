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

#ifndef UNISTEGO_RANDOM_HPP
#define UNISTEGO_RANDOM_HPP

#include <cstdint>
#include <random>

#include "unistego/bigint.hpp"

namespace unistego {

/// Seeded random source.  Output depends only on the seed and the sequence of
/// calls, on every platform: ranges are reduced by masking and rejection and
/// never through std:: distributions, whose algorithms are unspecified.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, bound); bound must be positive.  bound == 1 draws nothing.
  std::uint64_t uniform(std::uint64_t bound);
  BigInt uniform(const BigInt& bound);

  /// Uniform on [0, 1) with 53 bits of resolution.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bit() { return (next() >> 63) != 0; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace unistego

#endif  // UNISTEGO_RANDOM_HPP
