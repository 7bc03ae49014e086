// Copyright 2026 The tfim-fidelity Authors.
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

#include <cstdint>

#include "tfim/ed_oracle.hpp"
#include "tfim/elliptic.hpp"
#include "tfim/ising.hpp"
#include "tfim/parallel.hpp"
#include "tfim/scaling.hpp"

namespace {

void BM_LogFidelity(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  tfim::set_worker_limit(static_cast<unsigned>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tfim::log_fidelity({n, 1.0 + 1e-4, 1e-4}).log_f);
  }
  state.SetItemsProcessed(state.iterations() * (n / 2));
  tfim::set_worker_limit(0);
}
BENCHMARK(BM_LogFidelity)
    ->ArgsProduct({{1'000, 100'000, 10'000'000}, {1, 4}})
    ->UseRealTime()
    ->Unit(benchmark::kMicrosecond);

void BM_EdOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tfim::ed_oracle_fidelity(n, 1.0, 0.05));
  }
}
BENCHMARK(BM_EdOracle)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_ScalingA(benchmark::State& state) {
  double c = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tfim::scaling::scaling_a(c).a_value);
    c = c < 20.0 ? c * 1.37 : 0.1;
  }
}
BENCHMARK(BM_ScalingA);

void BM_EllipticE(benchmark::State& state) {
  const double m = static_cast<double>(state.range(0)) / 4.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tfim::elliptic::ellip_e(m));
  }
}
BENCHMARK(BM_EllipticE)->Arg(-8)->Arg(2)->Arg(8);

void BM_PerSiteIntegral(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tfim::log_fidelity_per_site_integral(1.0, 1e-4));
  }
}
BENCHMARK(BM_PerSiteIntegral)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
