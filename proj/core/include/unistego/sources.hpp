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

#ifndef UNISTEGO_SOURCES_HPP
#define UNISTEGO_SOURCES_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unistego/alphabet.hpp"
#include "unistego/bigint.hpp"
#include "unistego/bit_stream.hpp"
#include "unistego/random.hpp"

namespace unistego {

/// An i.i.d. categorical cover source.  Probabilities are kept as doubles and,
/// when the model was given with exact values summing to exactly one, also as
/// rationals so that distribution checks can run without rounding.
class SourceModel {
 public:
  /// Throws InvalidModel for fewer than two symbols, non-positive entries or
  /// a total that differs from 1 (exactly for rationals, by more than 1e-12
  /// for doubles), and the Alphabet errors for bad tokens.
  SourceModel(std::vector<std::pair<std::string, Rational>> entries);
  SourceModel(std::vector<std::pair<std::string, double>> entries);

  static SourceModel uniform(std::size_t k);
  /// Two symbols "a", "b" with probabilities p and 1 - p.
  static SourceModel two_point(const Rational& p);
  /// Zipf law with exponent s over k symbols: p(i) proportional to 1/(i+1)^s.
  static SourceModel zipf(double s, std::size_t k);

  /// "uniform:K", "two-point:P" or "zipf:S:K".
  static SourceModel preset(std::string_view text);

  /// "token probability" per line, probabilities as decimal strings.  The
  /// model is exact when the decimals add up to exactly one.
  static SourceModel parse(std::istream& in);
  static SourceModel load(const std::filesystem::path& path);
  void save(std::ostream& out) const;

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const double> probabilities() const noexcept { return probs_; }
  double probability(SymbolId s) const { return probs_.at(s); }
  bool is_exact() const noexcept { return exact_.has_value(); }
  /// Throws InvalidModel if the model is not exact.
  std::span<const Rational> exact_probabilities() const;

  /// SHA-256 (hex) of the canonical model text; identifies models in reports.
  std::string digest() const;

 private:
  SourceModel(Alphabet alphabet, std::vector<double> probs,
              std::optional<std::vector<Rational>> exact);

  Alphabet alphabet_;
  std::vector<double> probs_;  // indexed by SymbolId
  std::optional<std::vector<Rational>> exact_;
  std::vector<double> cumulative_;

  friend std::vector<SymbolId> draw_cover(const SourceModel&, std::size_t, Rng&);
};

/// Parses a decimal string such as "0.7", "1", ".25" or "2.5e-3" exactly.
Rational parse_decimal(std::string_view text);

/// count i.i.d. symbols by inverse-CDF sampling.
std::vector<SymbolId> draw_cover(const SourceModel& model, std::size_t count, Rng& rng);

/// count i.i.d. fair bits.
Bits draw_hidden_bits(std::size_t count, Rng& rng);

}  // namespace unistego

#endif  // UNISTEGO_SOURCES_HPP
