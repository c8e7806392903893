// Copyright 2026 The ncdist Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference against the OpenMP kernel for each parallel hot path.
// Worker count follows NC_THREADS.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "nc/distance.hpp"
#include "nc/parallel.hpp"
#include "nc/random.hpp"
#include "nc/scan.hpp"
#include "nc/wigner.hpp"

namespace {

const nc::ScanOptions kScan{.zeta = 0.4, .resolution = 200};

void BM_ScanSerial(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(nc::scan_csv_serial(kScan));
    }
}
BENCHMARK(BM_ScanSerial)->Unit(benchmark::kMillisecond);

void BM_ScanParallel(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(nc::scan_csv(kScan));
    }
    state.counters["workers"] = nc::worker_count();
}
BENCHMARK(BM_ScanParallel)->Unit(benchmark::kMillisecond);

std::vector<nc::Spectrum> batch_states(std::size_t n, std::size_t count) {
    nc::Rng rng = nc::make_rng(11);
    std::exponential_distribution<double> expo(1.0);
    std::vector<nc::Spectrum> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<double> v(n);
        for (double &x : v) {
            x = expo(rng);
        }
        double total = 0.0;
        for (double x : v) {
            total += x;
        }
        for (double &x : v) {
            x /= total;
        }
        out.push_back(nc::Spectrum::snapped(std::move(v)));
    }
    return out;
}

void BM_BatchSerial(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto states = batch_states(n, 2000);
    const nc::KernelSpectrum k = nc::random_kernel(n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nc::distance_batch_serial(states, k));
    }
}
BENCHMARK(BM_BatchSerial)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_BatchParallel(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto states = batch_states(n, 2000);
    const nc::KernelSpectrum k = nc::random_kernel(n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nc::distance_batch(states, k));
    }
}
BENCHMARK(BM_BatchParallel)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

nc::HermitianMatrix sample_state() {
    const std::vector<double> d{0.5, 0.3, 0.15, 0.05};
    return nc::HermitianMatrix::diagonal(d);
}

void BM_SampledMinSerial(benchmark::State &state) {
    const nc::HermitianMatrix rho = sample_state();
    const nc::KernelSpectrum k = nc::random_kernel(4, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nc::sampled_min_serial(rho, k, {.samples = 20000, .seed = 1}));
    }
}
BENCHMARK(BM_SampledMinSerial)->Unit(benchmark::kMillisecond);

void BM_SampledMinParallel(benchmark::State &state) {
    const nc::HermitianMatrix rho = sample_state();
    const nc::KernelSpectrum k = nc::random_kernel(4, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nc::sampled_min(rho, k, {.samples = 20000, .seed = 1}));
    }
}
BENCHMARK(BM_SampledMinParallel)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
