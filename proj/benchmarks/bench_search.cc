// Copyright 2026 The gcclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "gcclone/nosignalling.h"

using namespace gcclone;

static void BM_feasibility(benchmark::State &state) {
    double r = static_cast<double>(state.range(0)) / 100;
    ShrinkPair etas{r * std::cos(std::numbers::pi / 4), r * std::sin(std::numbers::pi / 4)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(feasibility(etas));
    }
}
BENCHMARK(BM_feasibility)->Arg(90)->Arg(113)->Unit(benchmark::kMillisecond);

static void BM_max_radius(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_radius(std::numbers::pi / 8));
    }
}
BENCHMARK(BM_max_radius)->Unit(benchmark::kMillisecond);
