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

#include <benchmark/benchmark.h>

#include "unistego/codecs.hpp"
#include "unistego/sources.hpp"

namespace {

using namespace unistego;

constexpr std::size_t kSymbols = 1 << 16;

void BM_StnEmbed(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto model = SourceModel::uniform(static_cast<std::size_t>(state.range(1)));
  Rng source(1);
  const auto cover = draw_cover(model, kSymbols, source);
  EmbedOptions options;
  options.trace = TraceLevel::none;
  for (auto _ : state) {
    RandomBitSource hidden(2);
    Rng delta(3), padding(4);
    auto result = stn_embed(cover, hidden, n, model.alphabet(), delta, padding, options);
    benchmark::DoNotOptimize(result.stego.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kSymbols));
}
BENCHMARK(BM_StnEmbed)->Args({2, 4})->Args({3, 3})->Args({8, 256})->Args({10, 16})->Args({32, 16});

void BM_StnExtract(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto model = SourceModel::uniform(16);
  Rng source(1), delta(3), padding(4);
  RandomBitSource hidden(2);
  const auto cover = draw_cover(model, kSymbols, source);
  const auto stego = stn_embed(cover, hidden, n, model.alphabet(), delta, padding).stego;
  for (auto _ : state) {
    auto result = stn_extract(stego, n, model.alphabet(), TraceLevel::none);
    benchmark::DoNotOptimize(result.bits.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kSymbols));
}
BENCHMARK(BM_StnExtract)->Arg(3)->Arg(10)->Arg(32);

void BM_St2Embed(benchmark::State& state) {
  const auto model = SourceModel::uniform(16);
  Rng source(1);
  const auto cover = draw_cover(model, kSymbols, source);
  EmbedOptions options;
  options.trace = TraceLevel::none;
  for (auto _ : state) {
    RandomBitSource hidden(2);
    Rng padding(4);
    auto result = st2_embed(cover, hidden, model.alphabet(), padding, options);
    benchmark::DoNotOptimize(result.stego.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kSymbols));
}
BENCHMARK(BM_St2Embed);

void BM_DrawCover(benchmark::State& state) {
  const auto model = SourceModel::zipf(1.1, 256);
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(draw_cover(model, kSymbols, rng).data());
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kSymbols));
}
BENCHMARK(BM_DrawCover);

}  // namespace
