// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "fracwave/quadrature.hpp"

using namespace fracwave;

static void BM_AdaptiveQuadrature(benchmark::State& state) {
  auto f = [](double t) -> cplx { return std::exp(cplx(-t, 8.0 * t)); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(f, 0.0, 20.0, 1e-12, 1e-12));
  }
}
BENCHMARK(BM_AdaptiveQuadrature);

BENCHMARK_MAIN();
