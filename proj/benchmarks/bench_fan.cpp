#include <benchmark/benchmark.h>

#include "jetforge/fan.hpp"
#include "jetforge/text.hpp"

using namespace jetforge;

static void BM_NewtonPolyhedron(benchmark::State& state) {
  const auto f = parse_rational("x^7 + x^3*y^2*z + y^5 + y*z^4 + z^6 + x^2*z^3", {"x", "y", "z"});
  for (auto _ : state) benchmark::DoNotOptimize(newton_polyhedron(f));
}
BENCHMARK(BM_NewtonPolyhedron);

static void BM_Resolve2D(benchmark::State& state) {
  const auto P = newton_polyhedron(parse_rational("x^13 + x^4*y^3 + y^17", {"x", "y"}));
  const auto fan = newton_fan(P);
  for (auto _ : state) benchmark::DoNotOptimize(resolve(fan, P));
}
BENCHMARK(BM_Resolve2D);

static void BM_Resolve3D(benchmark::State& state) {
  const auto P = newton_polyhedron(parse_rational("x^2 + y^3 + z^5", {"x", "y", "z"}));
  const auto fan = newton_fan(P);
  for (auto _ : state) benchmark::DoNotOptimize(resolve(fan, P));
}
BENCHMARK(BM_Resolve3D)->Unit(benchmark::kMillisecond);
