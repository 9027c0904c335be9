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

#include "unistego/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

#include "unistego/delta_code.hpp"
#include "unistego/errors.hpp"
#include "unistego/permutation_rank.hpp"

namespace unistego {
namespace {

std::uint64_t checked_cells(std::size_t k, std::size_t n) {
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (cells > kMaxEnumeratedBlocks / k)
      throw StegoError(ErrorKind::SpaceTooLarge, "block space too large to enumerate");
    cells *= k;
  }
  return cells;
}

void check_scheme_length(Scheme scheme, std::size_t n) {
  if (scheme == Scheme::st2 && n != 2)
    throw StegoError(ErrorKind::InvalidBlockLength, "the pair scheme uses blocks of length 2");
  if (n < 2) throw StegoError(ErrorKind::InvalidBlockLength, "block length must be at least 2");
}

template <class P>
P from_int(const BigInt& v) {
  if constexpr (std::is_same_v<P, Rational>)
    return Rational(v);
  else
    return v.convert_to<double>();
}

template <class P>
std::vector<P> cover_law(std::span<const P> probs, std::size_t n, std::uint64_t cells) {
  const std::size_t k = probs.size();
  std::vector<P> out(cells);
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    P mass = 1;
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      mass *= probs[rest % k];
      rest /= k;
    }
    out[idx] = mass;
  }
  return out;
}

template <class P>
std::vector<P> stego_law(const SourceModel& model, std::span<const P> probs, std::size_t n,
                         Scheme scheme, std::uint64_t cells) {
  const Alphabet& alphabet = model.alphabet();
  const std::size_t k = alphabet.size();

  // Bound the work before doing any of it.
  std::uint64_t payloads = 0;
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    const Block u = block_at(idx, n, k);
    const BigInt size = class_size(composition_of(u, alphabet));
    payloads += size > kMaxEnumeratedPayloads ? kMaxEnumeratedPayloads + 1
                                              : size.convert_to<std::uint64_t>();
    if (payloads > kMaxEnumeratedPayloads)
      throw StegoError(ErrorKind::SpaceTooLarge, "too many (block, payload) pairs to enumerate");
  }

  std::vector<P> out(cells, P(0));
  Rng unused_delta(0), unused_padding(0);
  Block v(n);
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    const Block u = block_at(idx, n, k);
    P mass = 1;
    for (SymbolId s : u) mass *= probs[s];

    if (scheme == Scheme::st2) {
      if (u[0] == u[1]) {
        out[idx] += mass;
        continue;
      }
      for (std::uint8_t bit : {0, 1}) {
        const Bits payload{bit};
        SpanBitSource hidden(payload);
        St2Encoder encoder(alphabet, hidden, unused_padding);
        encoder.embed_pair(std::span<const SymbolId, 2>(u.data(), 2),
                           std::span<SymbolId, 2>(v.data(), 2));
        out[block_index(v, k)] += mass * (P(1) / P(2));
      }
      continue;
    }

    const BinaryExpansion exp(class_size(composition_of(u, alphabet)));
    for (unsigned d = 0; d <= exp.top(); ++d) {
      if (!exp.bit(d)) continue;
      const BigInt span = BigInt(1) << d;
      const P p_delta = from_int<P>(span) / from_int<P>(exp.value());
      const P weight = mass * p_delta / from_int<P>(span);
      const std::uint64_t count = span.convert_to<std::uint64_t>();
      for (std::uint64_t r = 0; r < count; ++r) {
        Bits payload(d);
        for (unsigned i = 0; i < d; ++i) payload[i] = (r >> (d - 1 - i)) & 1u;
        SpanBitSource hidden(payload);
        StnEncoder encoder(alphabet, n, hidden, unused_delta, unused_padding, d);
        encoder.embed_block(u, v);
        out[block_index(v, k)] += weight;
      }
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Scheme scheme) noexcept {
  return scheme == Scheme::st2 ? "st2" : "stn";
}

Scheme parse_scheme(std::string_view text) {
  if (text == "st2") return Scheme::st2;
  if (text == "stn") return Scheme::stn;
  throw StegoError(ErrorKind::Config, "scheme must be 'st2' or 'stn'");
}

double shannon_entropy(const SourceModel& model) {
  double h = 0.0;
  for (double p : model.probabilities()) h -= p * std::log2(p);
  return h;
}

double min_entropy(const SourceModel& model) {
  const auto probs = model.probabilities();
  return -std::log2(*std::max_element(probs.begin(), probs.end()));
}

double st2_rate(const SourceModel& model) {
  double collision = 0.0;
  for (double p : model.probabilities()) collision += p * p;
  return 0.5 * (1.0 - collision);
}

double permutation_ceiling(std::size_t n) {
  return std::lgamma(static_cast<double>(n) + 1.0) / std::numbers::ln2 / static_cast<double>(n);
}

std::size_t BlockDistribution::cells() const noexcept {
  return mode == ProbabilityMode::rational ? rational.size() : real.size();
}

double BlockDistribution::probability(std::size_t index) const {
  return mode == ProbabilityMode::rational ? rational.at(index).convert_to<double>()
                                           : real.at(index);
}

double BlockDistribution::total() const {
  if (mode == ProbabilityMode::rational) {
    Rational sum = 0;
    for (const auto& p : rational) sum += p;
    return sum.convert_to<double>();
  }
  double sum = 0.0;
  for (double p : real) sum += p;
  return sum;
}

std::size_t block_index(std::span<const SymbolId> block, std::size_t alphabet_size) {
  std::size_t idx = 0;
  for (auto it = block.rbegin(); it != block.rend(); ++it) idx = idx * alphabet_size + *it;
  return idx;
}

Block block_at(std::size_t index, std::size_t n, std::size_t alphabet_size) {
  Block b(n);
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = static_cast<SymbolId>(index % alphabet_size);
    index /= alphabet_size;
  }
  return b;
}

BlockDistribution cover_distribution(const SourceModel& model, std::size_t n,
                                     ProbabilityMode mode) {
  const std::size_t k = model.alphabet().size();
  const std::uint64_t cells = checked_cells(k, n);
  BlockDistribution dist{n, k, mode, {}, {}};
  if (mode == ProbabilityMode::rational)
    dist.rational = cover_law<Rational>(model.exact_probabilities(), n, cells);
  else
    dist.real = cover_law<double>(model.probabilities(), n, cells);
  return dist;
}

BlockDistribution exact_output_distribution(const SourceModel& model, std::size_t n,
                                            Scheme scheme, std::optional<ProbabilityMode> mode) {
  check_scheme_length(scheme, n);
  const std::size_t k = model.alphabet().size();
  const std::uint64_t cells = checked_cells(k, n);
  const ProbabilityMode m =
      mode.value_or(model.is_exact() ? ProbabilityMode::rational : ProbabilityMode::real);
  BlockDistribution dist{n, k, m, {}, {}};
  if (m == ProbabilityMode::rational)
    dist.rational = stego_law<Rational>(model, model.exact_probabilities(), n, scheme, cells);
  else
    dist.real = stego_law<double>(model, model.probabilities(), n, scheme, cells);
  return dist;
}

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> expected) {
  if (observed.size() != expected.size())
    throw StegoError(ErrorKind::Config, "observed and expected cell counts differ");
  double total = 0.0;
  for (auto o : observed) total += static_cast<double>(o);

  struct Cell {
    double observed;
    double expected;
  };
  std::vector<Cell> cells;
  Cell pool{0.0, 0.0};
  bool pooled = false;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const Cell c{static_cast<double>(observed[i]), expected[i] * total};
    if (c.expected >= 5.0) {
      cells.push_back(c);
    } else {
      pool.observed += c.observed;
      pool.expected += c.expected;
      pooled = true;
    }
  }
  if (pooled && (pool.expected > 0.0 || pool.observed > 0.0)) {
    if (pool.expected >= 5.0 || cells.empty()) {
      cells.push_back(pool);
    } else {
      auto smallest = std::min_element(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        return a.expected < b.expected;
      });
      smallest->observed += pool.observed;
      smallest->expected += pool.expected;
    }
  }
  if (cells.size() < 2)
    throw StegoError(ErrorKind::DegenerateCells, "fewer than two cells after pooling");

  ChiSquareResult result;
  for (const auto& c : cells) {
    const double diff = c.observed - c.expected;
    result.statistic += diff * diff / c.expected;
  }
  result.cells = cells.size();
  result.degrees_of_freedom = cells.size() - 1;
  result.p_value = boost::math::gamma_q(static_cast<double>(result.degrees_of_freedom) / 2.0,
                                        result.statistic / 2.0);
  return result;
}

DistributionReport exact_report(const SourceModel& model, std::size_t n, Scheme scheme,
                                std::optional<ProbabilityMode> mode) {
  const BlockDistribution stego = exact_output_distribution(model, n, scheme, mode);
  const BlockDistribution cover = cover_distribution(model, n, stego.mode);

  DistributionReport report;
  report.scheme = scheme;
  report.n = n;
  report.model_digest = model.digest();
  report.probability_total = stego.total();
  if (stego.mode == ProbabilityMode::rational) {
    report.mode = "exact-rational";
    Rational worst = 0;
    for (std::size_t i = 0; i < stego.cells(); ++i) {
      Rational diff = abs(Rational(stego.rational[i] - cover.rational[i]));
      if (diff > worst) worst = diff;
    }
    report.exactly_equal = worst == 0;
    report.max_abs_deviation = worst.convert_to<double>();
  } else {
    report.mode = "exact-double";
    for (std::size_t i = 0; i < stego.cells(); ++i)
      report.max_abs_deviation =
          std::max(report.max_abs_deviation, std::abs(stego.real[i] - cover.real[i]));
  }
  return report;
}

std::vector<std::uint64_t> block_counts(std::span<const SymbolId> stream, std::size_t n,
                                        std::size_t alphabet_size) {
  std::vector<std::uint64_t> counts(checked_cells(alphabet_size, n), 0);
  for (std::size_t pos = 0; pos + n <= stream.size(); pos += n)
    ++counts[block_index(stream.subspan(pos, n), alphabet_size)];
  return counts;
}

namespace {

std::vector<SymbolId> embed_fresh(const SourceModel& model, std::size_t n, Scheme scheme,
                                  std::uint64_t symbols, const Seeds& seeds) {
  Rng source(seeds.source), delta(seeds.delta), padding(seeds.padding);
  RandomBitSource hidden(seeds.hidden);
  const auto cover = draw_cover(model, symbols, source);
  const EmbedOptions options{TraceLevel::none, std::nullopt};
  if (scheme == Scheme::st2)
    return st2_embed(cover, hidden, model.alphabet(), padding, options).stego;
  return stn_embed(cover, hidden, n, model.alphabet(), delta, padding, options).stego;
}

}  // namespace

DistributionReport empirical_report(const SourceModel& model, std::size_t n, Scheme scheme,
                                    std::uint64_t blocks, const Seeds& seeds) {
  check_scheme_length(scheme, n);
  const std::size_t k = model.alphabet().size();
  const BlockDistribution expected = cover_distribution(model, n, ProbabilityMode::real);
  const auto stego = embed_fresh(model, n, scheme, blocks * n, seeds);
  const auto counts = block_counts(stego, n, k);

  DistributionReport report;
  report.mode = "empirical";
  report.scheme = scheme;
  report.n = n;
  report.model_digest = model.digest();
  report.sample_size = blocks;
  report.seeds = seeds;
  report.chi_square = chi_square_gof(counts, expected.real);
  double total = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double freq = static_cast<double>(counts[i]) / static_cast<double>(blocks);
    total += freq;
    report.max_abs_deviation = std::max(report.max_abs_deviation, std::abs(freq - expected.real[i]));
  }
  report.probability_total = total;
  return report;
}

ChiSquareResult pair_independence_test(const SourceModel& model, std::size_t n, Scheme scheme,
                                       std::uint64_t pairs, const Seeds& seeds) {
  check_scheme_length(scheme, n);
  const BlockDistribution expected = cover_distribution(model, 2 * n, ProbabilityMode::real);
  const auto stego = embed_fresh(model, n, scheme, pairs * 2 * n, seeds);
  return chi_square_gof(block_counts(stego, 2 * n, model.alphabet().size()), expected.real);
}

RateBound rate_lower_bound(const SourceModel& model, std::size_t n, std::uint64_t mc_samples,
                           std::uint64_t seed) {
  if (n < 1) throw StegoError(ErrorKind::InvalidBlockLength, "block length must be positive");
  const auto probs = model.probabilities();
  const std::size_t k = probs.size();
  const double ln_n_fact = std::lgamma(static_cast<double>(n) + 1.0);

  // Number of letter-count vectors, C(n + k - 1, k - 1), in floating point.
  const double compositions =
      std::exp(std::lgamma(static_cast<double>(n + k)) - ln_n_fact - std::lgamma(static_cast<double>(k)));

  RateBound bound;
  if (compositions <= static_cast<double>(kMaxEnumeratedCompositions)) {
    std::vector<double> log_p(k);
    for (std::size_t a = 0; a < k; ++a) log_p[a] = std::log(probs[a]);
    double expectation = 0.0;
    // Depth-first over counts c_0..c_{k-1} with sum n.
    auto visit = [&](auto&& self, std::size_t a, std::size_t left, double ln_size,
                     double ln_weight) -> void {
      if (a + 1 == k) {
        const double s = ln_size - std::lgamma(static_cast<double>(left) + 1.0);
        const double w = ln_weight + static_cast<double>(left) * log_p[a];
        expectation += std::exp(s + w) * s / std::numbers::ln2;
        return;
      }
      for (std::size_t c = 0; c <= left; ++c)
        self(self, a + 1, left - c, ln_size - std::lgamma(static_cast<double>(c) + 1.0),
             ln_weight + static_cast<double>(c) * log_p[a]);
    };
    visit(visit, 0, n, ln_n_fact, 0.0);
    bound.value = (expectation - 2.0) / static_cast<double>(n);
    bound.enumerated = true;
    return bound;
  }

  if (mc_samples < 2) throw StegoError(ErrorKind::Config, "Monte-Carlo bound needs >= 2 samples");
  Rng rng(seed);
  double sum = 0.0, sum_sq = 0.0;
  Composition comp;
  for (std::uint64_t i = 0; i < mc_samples; ++i) {
    const auto block = draw_cover(model, n, rng);
    comp.assign(block, k);
    const double bits = n <= kMaxFixedWidthBlock
                            ? std::log2(static_cast<double>(class_size_u64(comp)))
                            : log2_of(class_size(comp));
    sum += bits;
    sum_sq += bits * bits;
  }
  const double m = static_cast<double>(mc_samples);
  const double mean = sum / m;
  const double var = std::max(0.0, (sum_sq - m * mean * mean) / (m - 1.0));
  bound.value = (mean - 2.0) / static_cast<double>(n);
  bound.std_error = std::sqrt(var / m) / static_cast<double>(n);
  bound.samples = mc_samples;
  bound.seed = seed;
  return bound;
}

void RateAccumulator::add(unsigned bits, double class_log2) {
  ++blocks_;
  bits_ += bits;
  sum_sq_ += static_cast<double>(bits) * bits;
  max_class_rate_ = std::max(max_class_rate_, class_log2 / static_cast<double>(n_));
}

void RateAccumulator::add(const BlockOutcome& outcome) {
  add(outcome.genuine_bits, outcome.class_log2);
}

void RateAccumulator::add(const BlockTrace& trace) {
  add(trace.genuine_bits, trace.class_size > 0 ? log2_of(trace.class_size) : 0.0);
}

double RateAccumulator::rate(std::uint64_t cover_symbols) const {
  return cover_symbols == 0 ? 0.0
                            : static_cast<double>(bits_) / static_cast<double>(cover_symbols);
}

double RateAccumulator::std_error(std::uint64_t cover_symbols) const {
  if (blocks_ < 2 || cover_symbols == 0) return 0.0;
  const double b = static_cast<double>(blocks_);
  const double mean = static_cast<double>(bits_) / b;
  const double var = std::max(0.0, (sum_sq_ - b * mean * mean) / (b - 1.0));
  return std::sqrt(b * var) / static_cast<double>(cover_symbols);
}

namespace {

RateReport fill_report(const RateAccumulator& acc, std::uint64_t cover_symbols,
                       const SourceModel& model, std::size_t n, Scheme scheme,
                       std::uint64_t bound_samples, std::uint64_t bound_seed) {
  RateReport r;
  r.scheme = scheme;
  r.n = n;
  r.model_digest = model.digest();
  r.empirical_rate = acc.rate(cover_symbols);
  r.std_error = acc.std_error(cover_symbols);
  r.bound = rate_lower_bound(model, n, bound_samples, bound_seed);
  r.st2_formula = st2_rate(model);
  r.ceiling = permutation_ceiling(n);
  r.entropy = shannon_entropy(model);
  r.min_entropy = min_entropy(model);
  r.max_class_rate = acc.max_class_rate();
  r.blocks_measured = acc.blocks();
  r.cover_symbols = cover_symbols;
  r.bits_embedded = acc.genuine_bits();
  return r;
}

}  // namespace

RateReport empirical_rate(std::span<const BlockTrace> trace, std::uint64_t cover_symbols,
                          const SourceModel& model, std::size_t n, Scheme scheme,
                          std::uint64_t bound_samples) {
  if (trace.empty()) throw StegoError(ErrorKind::EmptyTrace, "no embedded blocks to measure");
  RateAccumulator acc(n);
  for (const auto& t : trace) acc.add(t);
  return fill_report(acc, cover_symbols, model, n, scheme, bound_samples, 0);
}

RateReport measure_rate(const SourceModel& model, Scheme scheme, std::size_t n,
                        std::uint64_t cover_symbols, const Seeds& seeds,
                        std::uint64_t bound_samples) {
  check_scheme_length(scheme, n);
  Rng source(seeds.source), delta(seeds.delta), padding(seeds.padding);
  RandomBitSource hidden(seeds.hidden);
  const auto cover = draw_cover(model, cover_symbols, source);
  RateAccumulator acc(n);
  Block out(n);
  const std::size_t whole = cover.size() / n * n;
  if (scheme == Scheme::st2) {
    St2Encoder encoder(model.alphabet(), hidden, padding);
    for (std::size_t pos = 0; pos < whole; pos += 2)
      acc.add(encoder.embed_pair(std::span<const SymbolId, 2>(cover.data() + pos, 2),
                                 std::span<SymbolId, 2>(out.data(), 2)));
  } else {
    StnEncoder encoder(model.alphabet(), n, hidden, delta, padding);
    for (std::size_t pos = 0; pos < whole; pos += n)
      acc.add(encoder.embed_block(std::span<const SymbolId>(cover).subspan(pos, n), out));
  }
  RateReport report = fill_report(acc, cover_symbols, model, n, scheme, bound_samples,
                                   seeds.source ^ 0x9e3779b97f4a7c15ull);
  report.seeds = seeds;
  return report;
}

}  // namespace unistego
