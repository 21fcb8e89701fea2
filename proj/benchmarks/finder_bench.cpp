#include <benchmark/benchmark.h>

#include "emptybox/finder.hpp"
#include "emptybox/generators.hpp"
#include "emptybox/oracle.hpp"

namespace {

void BM_FindBoxN(benchmark::State& state) {
  auto points = emptybox::random_uniform(static_cast<std::size_t>(state.range(0)), 64, 42);
  for (auto _ : state) {
    auto result = emptybox::find_large_empty_box(points);
    benchmark::DoNotOptimize(result.box);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindBoxN)->RangeMultiplier(2)->Range(1 << 12, 1 << 20)->Complexity(benchmark::oN);

void BM_FindBoxD(benchmark::State& state) {
  auto points = emptybox::random_uniform(100000, static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) {
    auto result = emptybox::find_large_empty_box(points);
    benchmark::DoNotOptimize(result.box);
  }
}
BENCHMARK(BM_FindBoxD)->RangeMultiplier(4)->Range(2, 512);

void BM_OracleSmall(benchmark::State& state) {
  auto points = emptybox::random_uniform(static_cast<std::size_t>(state.range(0)), 2, 7);
  for (auto _ : state) {
    auto box = emptybox::max_empty_box_exact(points);
    benchmark::DoNotOptimize(box);
  }
}
BENCHMARK(BM_OracleSmall)->DenseRange(4, 16, 4);

}  // namespace

BENCHMARK_MAIN();
