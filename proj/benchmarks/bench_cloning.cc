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

#include "gcclone/cloning.h"

using namespace gcclone;

static void BM_clone_report(benchmark::State &state) {
    ShrinkPair etas{0.6, 0.8};
    GreatCircleAngle theta(1.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(clone_report(theta, etas));
    }
}
BENCHMARK(BM_clone_report);

static void BM_isotropy_scan(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(isotropy_scan({0.7, 0.7}, static_cast<size_t>(state.range(0))));
    }
}
BENCHMARK(BM_isotropy_scan)->Arg(64)->Arg(200);
