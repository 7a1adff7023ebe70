// Copyright 2026 The truthsem Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <filesystem>

#include "truthsem/closure.h"
#include "truthsem/elaborate.h"
#include "truthsem/report.h"

namespace truthsem {
namespace {

SentenceSystem corpus_system(const char* file) {
  return load_system(read_file(std::filesystem::path(TRUTHSEM_CORPUS_DIR) / file));
}

void BM_EnumerateYablo10(benchmark::State& state) {
  const SentenceSystem s = corpus_system("yablo_10.tsys");
  const EnumerationOptions options{.threads = static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_fixed_points(s, options));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(valuation_space_size(s.size())));
}
BENCHMARK(BM_EnumerateYablo10)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_VerdictGuptaBase(benchmark::State& state) {
  const SentenceSystem s = corpus_system("gupta_base.tsys");
  for (auto _ : state) benchmark::DoNotOptimize(verdict(s));
}
BENCHMARK(BM_VerdictGuptaBase)->Unit(benchmark::kMicrosecond);

void BM_MinimalFixedPointYablo10(benchmark::State& state) {
  const SentenceSystem s = corpus_system("yablo_10.tsys");
  for (auto _ : state) benchmark::DoNotOptimize(minimal_fixed_point(s));
}
BENCHMARK(BM_MinimalFixedPointYablo10);

void BM_ElaborateGuptaStarred(benchmark::State& state) {
  const std::string text = read_file(std::filesystem::path(TRUTHSEM_CORPUS_DIR) / "gupta_starred.tsys");
  for (auto _ : state) benchmark::DoNotOptimize(load_system(text));
}
BENCHMARK(BM_ElaborateGuptaStarred);

}  // namespace
}  // namespace truthsem

BENCHMARK_MAIN();
