#include <benchmark/benchmark.h>

#include <vector>

#include "repsum/kernels.hpp"
#include "repsum/reduction.hpp"

namespace {

using namespace repsum;

Sequence reciprocals(std::int64_t n) {
  std::vector<Rational> v;
  for (std::int64_t i = 1; i <= n; ++i) v.push_back(make_rational(1, i));
  return Sequence(1, std::move(v));
}

// Arguments: sequence length, weight order.
void BM_KernelSerial(benchmark::State& state) {
  const Sequence s = reciprocals(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::weighted_sum_serial(s.values(), state.range(1)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_KernelParallel(benchmark::State& state) {
  const Sequence s = reciprocals(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::weighted_sum_parallel(s.values(), state.range(1)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_KernelSerial)->ArgsProduct({{100, 1000, 5000}, {1, 10}});
BENCHMARK(BM_KernelParallel)->ArgsProduct({{100, 1000, 5000}, {1, 10}});

// Arguments: order m, upper bound n (q = 1).
void BM_NaiveLiteral(benchmark::State& state) {
  const Sequence s = reciprocals(state.range(1));
  const SumSpec spec{state.range(0), 1, state.range(1)};
  for (auto _ : state) benchmark::DoNotOptimize(naive_repeated_sum(s, spec, {kDefaultNaiveCeiling, true}));
}

void BM_NaiveMemo(benchmark::State& state) {
  const Sequence s = reciprocals(state.range(1));
  const SumSpec spec{state.range(0), 1, state.range(1)};
  for (auto _ : state) benchmark::DoNotOptimize(naive_repeated_sum(s, spec));
}

void BM_Reduced(benchmark::State& state) {
  const Sequence s = reciprocals(state.range(1));
  const SumSpec spec{state.range(0), 1, state.range(1)};
  for (auto _ : state) benchmark::DoNotOptimize(reduce_repeated_sum(s, spec));
}

BENCHMARK(BM_NaiveLiteral)->ArgsProduct({{1, 2, 5, 10}, {10}});
BENCHMARK(BM_NaiveMemo)->ArgsProduct({{1, 2, 5, 10}, {10}});
BENCHMARK(BM_Reduced)->ArgsProduct({{1, 2, 5, 10}, {10}});

}  // namespace

BENCHMARK_MAIN();
