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

// Checks on the codecs: the exact law of an output block, goodness-of-fit
// tests on sampled output, and hiding-rate measurements with the matching
// entropy figures and lower bound.

#ifndef UNISTEGO_ANALYSIS_HPP
#define UNISTEGO_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unistego/bigint.hpp"
#include "unistego/codecs.hpp"
#include "unistego/sources.hpp"

namespace unistego {

enum class Scheme { st2, stn };
std::string_view to_string(Scheme scheme) noexcept;
/// "st2" or "stn"; throws Config otherwise.
Scheme parse_scheme(std::string_view text);

/// Seeds of every random stream an experiment uses.
struct Seeds {
  std::uint64_t source = 1;
  std::uint64_t hidden = 2;
  std::uint64_t delta = 3;
  std::uint64_t padding = 4;
};

// -- entropy figures ---------------------------------------------------------

/// Shannon entropy in bits.
double shannon_entropy(const SourceModel& model);
/// Min-entropy in bits, the smallest -log2 p(a).
double min_entropy(const SourceModel& model);
/// Hidden bits per cover symbol of the pair scheme: (1 - sum p(a)^2) / 2.
double st2_rate(const SourceModel& model);
/// log2(n!) / n, the rate ceiling of block length n.
double permutation_ceiling(std::size_t n);

// -- exact output law --------------------------------------------------------

inline constexpr std::uint64_t kMaxEnumeratedBlocks = 1'000'000;
inline constexpr std::uint64_t kMaxEnumeratedPayloads = 50'000'000;

enum class ProbabilityMode { rational, real };

/// A law on A^n.  Blocks are indexed in base |A|, first symbol least
/// significant; exactly one of the vectors is populated.
struct BlockDistribution {
  std::size_t n = 0;
  std::size_t alphabet_size = 0;
  ProbabilityMode mode = ProbabilityMode::real;
  std::vector<Rational> rational;
  std::vector<double> real;

  std::size_t cells() const noexcept;
  double probability(std::size_t index) const;
  double total() const;
};

std::size_t block_index(std::span<const SymbolId> block, std::size_t alphabet_size);
Block block_at(std::size_t index, std::size_t n, std::size_t alphabet_size);

/// The i.i.d. cover law mu^n.  Rational mode requires an exact model.
BlockDistribution cover_distribution(const SourceModel& model, std::size_t n,
                                     ProbabilityMode mode);

/// Output law of one stego block, by enumerating every cover block u, every
/// payload length d with its probability and every equiprobable payload r,
/// and pushing the mass through the codec's block map.  Defaults to rational
/// arithmetic for exact models.  Throws SpaceTooLarge when |A|^n exceeds
/// kMaxEnumeratedBlocks or the (u, d, r) count exceeds kMaxEnumeratedPayloads,
/// and InvalidBlockLength for st2 with n != 2 or stn with n < 2.
BlockDistribution exact_output_distribution(const SourceModel& model, std::size_t n,
                                            Scheme scheme = Scheme::stn,
                                            std::optional<ProbabilityMode> mode = {});

// -- goodness of fit ---------------------------------------------------------

struct ChiSquareResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t degrees_of_freedom = 0;
  std::size_t cells = 0;  // after pooling
};

/// Pearson goodness-of-fit test with the upper-tail p-value.  Cells expecting
/// fewer than five counts are pooled into one; if that pool still expects
/// fewer than five it joins the smallest remaining cell.  Throws
/// DegenerateCells if fewer than two cells remain.
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> expected);

struct DistributionReport {
  std::string mode;  // "exact-rational", "exact-double" or "empirical"
  Scheme scheme = Scheme::stn;
  std::size_t n = 0;
  std::string model_digest;
  double max_abs_deviation = 0.0;
  bool exactly_equal = false;  // rational mode found no difference at all
  double probability_total = 0.0;
  std::optional<ChiSquareResult> chi_square;
  std::uint64_t sample_size = 0;  // blocks, empirical mode
  std::optional<Seeds> seeds;
};

DistributionReport exact_report(const SourceModel& model, std::size_t n, Scheme scheme,
                                std::optional<ProbabilityMode> mode = {});

/// Embeds `blocks` blocks of fresh cover with fresh hidden bits and tests the
/// output block counts against mu^n.
DistributionReport empirical_report(const SourceModel& model, std::size_t n, Scheme scheme,
                                    std::uint64_t blocks, const Seeds& seeds);

/// Chi-square of adjacent output block pairs against mu^(2n).
ChiSquareResult pair_independence_test(const SourceModel& model, std::size_t n, Scheme scheme,
                                       std::uint64_t pairs, const Seeds& seeds);

/// Block counts of a stream, trailing partial block ignored.
std::vector<std::uint64_t> block_counts(std::span<const SymbolId> stream, std::size_t n,
                                        std::size_t alphabet_size);

// -- rates -------------------------------------------------------------------

struct RateBound {
  double value = 0.0;      // (E[log2 |class|] - 2) / n
  double std_error = 0.0;  // zero when computed by enumeration
  bool enumerated = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Enumerates letter-count vectors when there are at most
/// kMaxEnumeratedCompositions of them, otherwise averages over mc_samples
/// random blocks drawn with `seed`.  May be negative for short blocks.
inline constexpr std::uint64_t kMaxEnumeratedCompositions = 200'000;
RateBound rate_lower_bound(const SourceModel& model, std::size_t n,
                           std::uint64_t mc_samples = 100'000, std::uint64_t seed = 0);

/// Running totals over embedded blocks.
class RateAccumulator {
 public:
  explicit RateAccumulator(std::size_t n) : n_(n) {}
  void add(const BlockOutcome& outcome);
  void add(const BlockTrace& trace);

  std::uint64_t blocks() const noexcept { return blocks_; }
  std::uint64_t genuine_bits() const noexcept { return bits_; }
  /// Genuine bits per cover symbol.
  double rate(std::uint64_t cover_symbols) const;
  /// Standard error of rate() from the per-block spread.
  double std_error(std::uint64_t cover_symbols) const;
  /// Largest log2(class size) / n seen, which caps the rate.
  double max_class_rate() const noexcept { return max_class_rate_; }

 private:
  void add(unsigned bits, double class_log2);

  std::size_t n_;
  std::uint64_t blocks_ = 0;
  std::uint64_t bits_ = 0;
  double sum_sq_ = 0.0;
  double max_class_rate_ = 0.0;
};

struct RateReport {
  Scheme scheme = Scheme::stn;
  std::size_t n = 0;
  std::string model_digest;
  double empirical_rate = 0.0;
  double std_error = 0.0;
  RateBound bound;
  double st2_formula = 0.0;  // pair-scheme rate formula, for comparison
  double ceiling = 0.0;      // log2(n!)/n
  double entropy = 0.0;
  double min_entropy = 0.0;
  double max_class_rate = 0.0;
  std::uint64_t blocks_measured = 0;
  std::uint64_t cover_symbols = 0;
  std::uint64_t bits_embedded = 0;
  std::optional<Seeds> seeds;
};

/// Rate of an embedding from its block trace.  Throws EmptyTrace.
RateReport empirical_rate(std::span<const BlockTrace> trace, std::uint64_t cover_symbols,
                          const SourceModel& model, std::size_t n, Scheme scheme = Scheme::stn,
                          std::uint64_t bound_samples = 100'000);

/// Draws cover_symbols symbols, embeds an endless fair hidden stream and
/// reports the achieved rate.  No padding is ever needed.
RateReport measure_rate(const SourceModel& model, Scheme scheme, std::size_t n,
                        std::uint64_t cover_symbols, const Seeds& seeds,
                        std::uint64_t bound_samples = 100'000);

}  // namespace unistego

#endif  // UNISTEGO_ANALYSIS_HPP
