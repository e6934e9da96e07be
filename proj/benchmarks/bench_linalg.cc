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

#include <random>

#include "gcclone/linalg.h"

using namespace gcclone;

static ComplexMatrix random_hermitian(size_t dim, uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::uniform_real_distribution<double> u(-1, 1);
    ComplexMatrix m(dim);
    for (size_t r = 0; r < dim; r++) {
        m(r, r) = u(engine);
        for (size_t c = r + 1; c < dim; c++) {
            m(r, c) = Complex(u(engine), u(engine));
            m(c, r) = std::conj(m(r, c));
        }
    }
    return m;
}

static void BM_hermitian_eigenvalues(benchmark::State &state) {
    auto m = random_hermitian(static_cast<size_t>(state.range(0)), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigenvalues(m));
    }
}
BENCHMARK(BM_hermitian_eigenvalues)->Arg(2)->Arg(4)->Arg(8);

static void BM_partial_trace_8(benchmark::State &state) {
    auto m = random_hermitian(8, 6);
    const size_t dims[] = {2, 2, 2};
    const size_t keep[] = {0, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_trace(m, dims, keep));
    }
}
BENCHMARK(BM_partial_trace_8);
