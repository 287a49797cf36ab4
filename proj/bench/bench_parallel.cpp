// Copyright 2026 The pointerlab Authors
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

#include "pointerlab/density_map.hpp"
#include "pointerlab/estimation.hpp"

namespace {

using pointerlab::Execution;
using pointerlab::Geometry;
using pointerlab::MeasurementConfig;
using pointerlab::PointerDensity;
using pointerlab::QubitState;

PointerDensity make_density(Geometry g) {
    return PointerDensity(QubitState(0.7), MeasurementConfig::from_weakness(0.15, g, 6));
}

template <bool kParallel>
void BM_DensityMap(benchmark::State& state) {
    const PointerDensity density = make_density(static_cast<Geometry>(state.range(0)));
    const auto window = density.window();
    for (auto _ : state) {
        auto map = kParallel ? pointerlab::render_density_map(density, window, 128, 128)
                             : pointerlab::render_density_map_serial(density, window, 128, 128);
        benchmark::DoNotOptimize(map.values.data());
    }
}
BENCHMARK(BM_DensityMap<false>)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DensityMap<true>)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

template <Execution kExec>
void BM_AvgFidelity(benchmark::State& state) {
    const MeasurementConfig cfg = MeasurementConfig::from_weakness(0.3, static_cast<Geometry>(state.range(0)), 6);
    pointerlab::FidelityOptions opts;
    opts.abs_tol = 1e-6;
    opts.exec = kExec;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pointerlab::avg_fidelity(QubitState(0.7), cfg, opts));
    }
}
BENCHMARK(BM_AvgFidelity<Execution::Serial>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AvgFidelity<Execution::Parallel>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
