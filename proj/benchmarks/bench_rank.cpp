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

#include "unistego/permutation_rank.hpp"
#include "unistego/sources.hpp"

namespace {

using namespace unistego;

std::vector<Block> random_blocks(std::size_t k, std::size_t n, std::size_t count) {
  const auto model = SourceModel::uniform(k);
  Rng rng(42);
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < count; ++i) blocks.push_back(draw_cover(model, n, rng));
  return blocks;
}

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto blocks = random_blocks(16, n, 256);
  const Alphabet alphabet(generated_tokens(16));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(blocks[i++ % blocks.size()], alphabet));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Rank)->Arg(4)->Arg(8)->Arg(16)->Arg(20)->Arg(32)->Arg(64)->Arg(256);

void BM_Unrank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto blocks = random_blocks(16, n, 256);
  const Alphabet alphabet(generated_tokens(16));
  std::vector<std::pair<Composition, BigInt>> work;
  for (const auto& b : blocks) work.emplace_back(composition_of(b, alphabet), rank(b, alphabet));
  Block out(n);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [comp, index] = work[i++ % work.size()];
    unrank(comp, index, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Unrank)->Arg(4)->Arg(8)->Arg(16)->Arg(20)->Arg(32)->Arg(64)->Arg(256);

void BM_RankWide(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto blocks = random_blocks(16, n, 256);
  const Alphabet alphabet(generated_tokens(16));
  std::vector<Composition> comps;
  for (const auto& b : blocks) comps.push_back(composition_of(b, alphabet));
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t j = i++ % blocks.size();
    benchmark::DoNotOptimize(detail::rank_wide(blocks[j], comps[j]));
  }
}
BENCHMARK(BM_RankWide)->Arg(8)->Arg(20);

}  // namespace
