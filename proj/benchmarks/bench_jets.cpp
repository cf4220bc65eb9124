#include <benchmark/benchmark.h>

#include "jetforge/jets.hpp"

using namespace jetforge;

static void BM_JetIdealPhamBrieskorn(benchmark::State& state) {
  const auto f = parse_rational("x^4 + y^4 + z^4", {"x", "y", "z"});
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jet_ideal(f, m));
}
BENCHMARK(BM_JetIdealPhamBrieskorn)->DenseRange(1, 6);

static void BM_JetIdealFamily(benchmark::State& state) {
  const Symbols symbols({"x", "y", "z"}, {"s", "t"});
  const auto f = parse("x^3 + y^3 + z^3 + s*x*y*z + t*x^2*y", symbols);
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jet_ideal(f, m));
}
BENCHMARK(BM_JetIdealFamily)->DenseRange(1, 5);

static void BM_ParseAndPrint(benchmark::State& state) {
  const Symbols symbols({"x", "y", "z"}, {"s"});
  const std::string text = "x^4 + 3/2*x^2*y*z - y^4 + s*z^4 - 7*x*y + 1";
  for (auto _ : state) benchmark::DoNotOptimize(to_string(parse(text, symbols), symbols));
}
BENCHMARK(BM_ParseAndPrint);
