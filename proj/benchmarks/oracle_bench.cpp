// Copyright 2026 The isi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <benchmark/benchmark.h>

#include "isi/mc_oracle.hpp"

namespace isi {
namespace {

void BM_GridIntegral(benchmark::State& state) {
  const auto steps = static_cast<unsigned>(state.range(0));
  const auto dw = wiener_increments(1, 0, steps, 3, 0.5);
  const KernelSpec spec = KernelSpec::unweighted(3);
  const IndexPattern pattern{{1, 2, 3}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterated_on_grid(spec, pattern, dw, 3, 0.5, Calculus::kIto));
  }
}
BENCHMARK(BM_GridIntegral)->Arg(1 << 10)->Arg(1 << 12);

void BM_Projection(benchmark::State& state) {
  const unsigned steps = 1u << 12;
  const LegendreProjector proj(steps, static_cast<unsigned>(state.range(0)), 0.5);
  const auto dw = wiener_increments(1, 0, steps, 2, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(proj.project(dw, 2));
}
BENCHMARK(BM_Projection)->Arg(2)->Arg(6);

void BM_Increments(benchmark::State& state) {
  std::uint64_t path = 0;
  for (auto _ : state) benchmark::DoNotOptimize(wiener_increments(1, path++, 1u << 12, 2, 0.5));
}
BENCHMARK(BM_Increments);

}  // namespace
}  // namespace isi
