#include <benchmark/benchmark.h>

#include "jetforge/flatness.hpp"

using namespace jetforge;

static void BM_CountFermatQuartic(benchmark::State& state) {
  const auto f = parse_rational("x^4 + y^4 + z^4", {"x", "y", "z"});
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto ideal = reduce_mod(jet_ideal(f, 3), q);
  CountOptions options;
  options.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_points(ideal, options));
}
BENCHMARK(BM_CountFermatQuartic)->Args({3, 1})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

static void BM_CountCusp(benchmark::State& state) {
  const auto f = parse_rational("x^2 + y^3", {"x", "y"});
  const auto ideal = reduce_mod(jet_ideal(f, static_cast<std::size_t>(state.range(0))), 5);
  for (auto _ : state) benchmark::DoNotOptimize(count_points(ideal));
}
BENCHMARK(BM_CountCusp)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);
