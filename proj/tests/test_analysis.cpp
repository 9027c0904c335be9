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

#include <doctest.h>

#include <cmath>
#include <numeric>

#include "support.hpp"
#include "unistego/analysis.hpp"
#include "unistego/errors.hpp"

using namespace unistego;
using namespace unistego::testing;

namespace {

SourceModel exact_model(std::initializer_list<Rational> probs) {
  std::vector<std::pair<std::string, Rational>> entries;
  const auto tokens = generated_tokens(probs.size());
  std::size_t i = 0;
  for (const auto& p : probs) entries.emplace_back(tokens[i++], p);
  return SourceModel(std::move(entries));
}

}  // namespace

TEST_CASE("entropy figures") {
  const auto two = SourceModel::uniform(2);
  CHECK(shannon_entropy(two) == doctest::Approx(1.0));
  CHECK(min_entropy(two) == doctest::Approx(1.0));

  const auto skew = exact_model({Rational(7, 10), Rational(3, 10)});
  CHECK(shannon_entropy(skew) == doctest::Approx(0.881291).epsilon(1e-6));
  CHECK(min_entropy(skew) == doctest::Approx(-std::log2(0.7)));
  CHECK(min_entropy(skew) == doctest::Approx(0.514573).epsilon(1e-6));

  for (int k : {1, 3, 6, 10}) {
    const auto u = SourceModel::uniform(std::size_t{1} << k);
    CHECK(shannon_entropy(u) == doctest::Approx(k));
    CHECK(min_entropy(u) == doctest::Approx(k));
  }
}

TEST_CASE("pair scheme rate formula") {
  CHECK(st2_rate(SourceModel::uniform(2)) == doctest::Approx(0.25));
  for (std::size_t k : {3, 16, 100})
    CHECK(st2_rate(SourceModel::uniform(k)) == doctest::Approx(0.5 * (1.0 - 1.0 / k)));
  const auto nearly_constant = exact_model({Rational(999999, 1000000), Rational(1, 1000000)});
  CHECK(st2_rate(nearly_constant) < 1e-5);
}

TEST_CASE("exact output law equals the cover law") {
  const auto skew = exact_model({Rational(7, 10), Rational(3, 10)});
  const auto r2 = exact_report(skew, 2, Scheme::stn);
  CHECK(r2.mode == "exact-rational");
  CHECK(r2.exactly_equal);
  CHECK(r2.max_abs_deviation == 0.0);
  CHECK(r2.probability_total == 1.0);

  const auto three = exact_model({Rational(1, 2), Rational(3, 10), Rational(1, 5)});
  const auto r3 = exact_report(three, 3, Scheme::stn);
  CHECK(r3.exactly_equal);
  const auto dist = exact_output_distribution(three, 3);
  CHECK(dist.cells() == 27);

  const auto pair = exact_report(three, 2, Scheme::st2);
  CHECK(pair.exactly_equal);

  const auto zipf = SourceModel::zipf(1.3, 5);
  const auto real = exact_report(zipf, 4, Scheme::stn);
  CHECK(real.mode == "exact-double");
  CHECK(real.max_abs_deviation < 1e-12);
  CHECK(std::abs(real.probability_total - 1.0) < 1e-12);

  // Double arithmetic on an exact model as well.
  CHECK(exact_report(three, 5, Scheme::stn, ProbabilityMode::real).max_abs_deviation < 1e-12);
}

TEST_CASE("exact output law guards") {
  try {
    (void)exact_output_distribution(SourceModel::uniform(1024), 3);
    FAIL("expected SpaceTooLarge");
  } catch (const StegoError& e) {
    CHECK(e.kind() == ErrorKind::SpaceTooLarge);
  }
  // 2^19 blocks pass the block guard but their classes are far too large.
  CHECK_THROWS_AS((void)exact_output_distribution(SourceModel::uniform(2), 19), StegoError);
  CHECK_THROWS_AS((void)exact_output_distribution(SourceModel::uniform(2), 3, Scheme::st2),
                  StegoError);
  CHECK_THROWS_AS((void)SourceModel::uniform(1), StegoError);
}

TEST_CASE("block indexing round-trips") {
  for (std::size_t i = 0; i < 125; ++i) CHECK(block_index(block_at(i, 3, 5), 5) == i);
  CHECK(block_index(Block{1, 0}, 2) == 1);
}

TEST_CASE("chi-square goodness of fit") {
  const std::vector<double> third(3, 1.0 / 3.0);
  const std::vector<std::uint64_t> proportional{100, 100, 100};
  auto zero = chi_square_gof(proportional, third);
  CHECK(zero.statistic == doctest::Approx(0.0));
  CHECK(zero.p_value == doctest::Approx(1.0));

  // Two degrees of freedom: the upper tail is exp(-x/2).
  const std::vector<std::uint64_t> skewed{10, 20, 30};
  auto c = chi_square_gof(skewed, third);
  CHECK(c.statistic == doctest::Approx(10.0));
  CHECK(c.degrees_of_freedom == 2);
  CHECK(c.p_value == doctest::Approx(std::exp(-5.0)));

  // Cells expecting < 5 are pooled: 1000 samples, two rare cells of 0.002.
  const std::vector<double> probs{0.498, 0.498, 0.002, 0.002};
  const std::vector<std::uint64_t> obs{500, 496, 2, 2};
  auto pooled = chi_square_gof(obs, probs);
  CHECK(pooled.cells == 2);  // 4 + 4 < 5 joins the smallest big cell
  CHECK(pooled.degrees_of_freedom == 1);

  const std::vector<double> one{1.0};
  const std::vector<std::uint64_t> all{10};
  try {
    (void)chi_square_gof(all, one);
    FAIL("expected DegenerateCells");
  } catch (const StegoError& e) {
    CHECK(e.kind() == ErrorKind::DegenerateCells);
  }
}

TEST_CASE("empirical check accepts the codec and rejects a shifted source") {
  const auto model = exact_model({Rational(1, 2), Rational(3, 10), Rational(1, 5)});
  const auto report = empirical_report(model, 3, Scheme::stn, 50'000, Seeds{11, 12, 13, 14});
  REQUIRE(report.chi_square.has_value());
  CHECK(report.chi_square->p_value > 1e-3);
  CHECK(report.probability_total == doctest::Approx(1.0));

  const auto shifted = exact_model({Rational(11, 20), Rational(1, 4), Rational(1, 5)});
  Rng rng(5);
  const auto sample = draw_cover(shifted, 3 * 100'000, rng);
  const auto expected = cover_distribution(model, 3, ProbabilityMode::real);
  CHECK(chi_square_gof(block_counts(sample, 3, 3), expected.real).p_value < 1e-3);
}

TEST_CASE("adjacent output blocks look independent") {
  const auto model = exact_model({Rational(7, 10), Rational(3, 10)});
  CHECK(pair_independence_test(model, 3, Scheme::stn, 100'000, Seeds{}).p_value > 1e-3);
  CHECK(pair_independence_test(model, 2, Scheme::st2, 100'000, Seeds{}).p_value > 1e-3);
}

TEST_CASE("rate lower bound") {
  const auto fair = SourceModel::uniform(2);
  const auto b = rate_lower_bound(fair, 2);
  CHECK(b.enumerated);
  CHECK(b.value == doctest::Approx(-0.75));

  // Enumeration over letter counts against a sum over every block.
  const auto three = exact_model({Rational(1, 2), Rational(3, 10), Rational(1, 5)});
  for (std::size_t n : {2, 3, 5, 7}) {
    double expectation = 0.0;
    for (const Block& u : all_blocks(3, n)) {
      double mass = 1.0;
      for (SymbolId s : u) mass *= three.probability(s);
      expectation += mass * std::log2(static_cast<double>(brute_force_class(u).size()));
    }
    CHECK(rate_lower_bound(three, n).value == doctest::Approx((expectation - 2.0) / n).epsilon(1e-9));
  }

  const auto wide = rate_lower_bound(SourceModel::uniform(256), 8, 100'000, 3);
  CHECK_FALSE(wide.enumerated);
  CHECK(wide.std_error > 0.0);
  // All-distinct blocks would give (log2 8! - 2)/8 = 1.6624; collisions in
  // about 10% of blocks pull the expectation slightly below that.
  CHECK(wide.value < 1.6624);
  CHECK(wide.value > 1.6624 - 0.03);
}

TEST_CASE("empirical rate") {
  const auto model = SourceModel::uniform(3);
  const Alphabet& a = model.alphabet();
  Rng delta(1), padding(2);
  const Bits hidden(100, 1);
  const auto same = stn_embed(ids(a, "aaabbbcccaaa"), hidden, 3, a, delta, padding);
  const auto r = empirical_rate(same.trace, 12, model, 3);
  CHECK(r.empirical_rate == 0.0);
  CHECK(r.blocks_measured == 4);
  CHECK_THROWS_AS((void)empirical_rate({}, 0, model, 3), StegoError);

  const auto pair = measure_rate(SourceModel::uniform(2), Scheme::st2, 2, 200'000, Seeds{});
  CHECK(std::abs(pair.empirical_rate - 0.25) < 3 * pair.std_error);
  CHECK(pair.empirical_rate <= pair.max_class_rate);

  const auto blocks = measure_rate(model, Scheme::stn, 6, 60'000, Seeds{});
  CHECK(blocks.empirical_rate > 0.0);
  CHECK(blocks.empirical_rate <= blocks.max_class_rate);
  CHECK(blocks.empirical_rate >= blocks.bound.value - 3 * blocks.std_error);
  CHECK(blocks.entropy == doctest::Approx(std::log2(3.0)));
}
