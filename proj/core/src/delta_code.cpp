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

#include "unistego/delta_code.hpp"

namespace unistego {

std::vector<DeltaProbability> delta_probabilities(const BinaryExpansion& exp) {
  std::vector<DeltaProbability> out;
  out.reserve(exp.top() + 1);
  for (unsigned i = exp.top() + 1; i-- > 0;) {
    Rational p = 0;
    if (exp.bit(i)) p = Rational(BigInt(1) << i, exp.value());
    out.push_back({i, std::move(p)});
  }
  return out;
}

Rational expected_payload_bits(const BinaryExpansion& exp) {
  BigInt weighted = 0;
  for (unsigned i = 1; i <= exp.top(); ++i) {
    if (exp.bit(i)) weighted += BigInt(i) << i;
  }
  return Rational(weighted, exp.value());
}

}  // namespace unistego
