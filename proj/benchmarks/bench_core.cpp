// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <benchmark/benchmark.h>

#include "msvf/analysis.hpp"
#include "msvf/chains.hpp"
#include "msvf/random_sets.hpp"

using namespace msvf;

namespace {

std::vector<CompactSet> bench_sets(std::size_t count) {
  SetGenerator gen(42);
  std::vector<CompactSet> sets;
  for (std::size_t i = 0; i < count; ++i) sets.push_back(gen.interval_union(3, -5, 5));
  return sets;
}

void bm_hausdorff(benchmark::State& state) {
  const auto sets = bench_sets(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(hausdorff(sets[0], sets[1]));
}
BENCHMARK(bm_hausdorff);

void bm_metric_average(benchmark::State& state) {
  const auto sets = bench_sets(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(metric_average(sets[0], sets[1], 0.5));
}
BENCHMARK(bm_metric_average);

void bm_metric_linear_combination(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  const auto sets = bench_sets(count);
  const std::vector<double> coeffs(count, 1.0 / static_cast<double>(count));
  for (auto _ : state)
    benchmark::DoNotOptimize(metric_linear_combination(coeffs, sets));
}
BENCHMARK(bm_metric_linear_combination)->Arg(3)->Arg(6)->Arg(12);

void bm_metric_bernstein(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SVFOracle g = oracle_kinked_nonconvex(0.25);
  const SampledSVF f = g.sample(Partition::uniform(0, 1, n));
  const OperatorSpec spec = bernstein_operator();
  for (auto _ : state)
    benchmark::DoNotOptimize(apply_metric_operator(spec, f, 0.5));
}
BENCHMARK(bm_metric_bernstein)->Arg(8)->Arg(16)->Arg(32);

void bm_metric_schoenberg(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SVFOracle g = oracle_kinked_nonconvex(0.25);
  const SampledSVF f = g.sample(Partition::uniform(0, 1, n));
  const OperatorSpec spec = schoenberg_operator(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(apply_metric_operator(spec, f, 0.75));
}
BENCHMARK(bm_metric_schoenberg)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
