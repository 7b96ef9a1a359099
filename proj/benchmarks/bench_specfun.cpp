// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <complex>

#include "fracwave/specfun.hpp"

using namespace fracwave;

static void BM_MittagLefflerSeries(benchmark::State& state) {
  cplx z = std::polar(5.0, 2.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mittag_leffler(1.5, 1.0, z));
  }
}
BENCHMARK(BM_MittagLefflerSeries);

static void BM_MittagLefflerAsymptotic(benchmark::State& state) {
  cplx z = std::polar(200.0, 2.8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mittag_leffler(1.5, 1.0, z));
  }
}
BENCHMARK(BM_MittagLefflerAsymptotic);

static void BM_MittagLefflerContour(benchmark::State& state) {
  cplx z = std::polar(14.0, 2.8);  // just above the crossover: quadrature tail
  for (auto _ : state) {
    benchmark::DoNotOptimize(mittag_leffler_path(MlPath::large_z, 1.5, 1.0, z));
  }
}
BENCHMARK(BM_MittagLefflerContour);

static void BM_WrightSeries(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(wright_density(1.5, 1.5));
  }
}
BENCHMARK(BM_WrightSeries);

static void BM_WrightSaddleContour(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(wright_density(1.5, 20.0));
  }
}
BENCHMARK(BM_WrightSaddleContour);

static void BM_MacdonaldHalfInteger(benchmark::State& state) {
  cplx z(1.3, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(macdonald_k(1.5, z));
  }
}
BENCHMARK(BM_MacdonaldHalfInteger);

static void BM_MacdonaldIntegral(benchmark::State& state) {
  cplx z(1.3, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(macdonald_k_general(1.5, z));
  }
}
BENCHMARK(BM_MacdonaldIntegral);

BENCHMARK_MAIN();
