#include <benchmark/benchmark.h>

#include "cableord/bounds.hpp"
#include "cableord/cabling.hpp"
#include "cableord/curve.hpp"
#include "cableord/knot_spec.hpp"
#include "cableord/lspace.hpp"
#include "cableord/simplify.hpp"
#include "cableord/validation.hpp"

using namespace cableord;

namespace {

void BM_TorusStaircase(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(staircase_curve(torus_alexander(3, q)));
}
BENCHMARK(BM_TorusStaircase)->Arg(10)->Arg(40)->Arg(160);

void BM_CableGeometric(benchmark::State& state) {
  const auto base = staircase_curve(torus_alexander(3, 7));
  const CableParams cp{static_cast<int>(state.range(0)), 1};
  for (auto _ : state) benchmark::DoNotOptimize(cable_geometric(base, cp));
}
BENCHMARK(BM_CableGeometric)->Arg(2)->Arg(3)->Arg(5)->Arg(9);

void BM_CrosscheckRules(benchmark::State& state) {
  const auto base = staircase_curve(torus_alexander(3, 7));
  for (auto _ : state) benchmark::DoNotOptimize(crosscheck_rules(base, CableParams{3, 11}));
}
BENCHMARK(BM_CrosscheckRules);

void BM_IterateCable(benchmark::State& state) {
  const auto spec = parse_knot_spec("T(2,3);(2,3);(2,5);(3,7)");
  for (auto _ : state) benchmark::DoNotOptimize(iterate_cable(spec));
}
BENCHMARK(BM_IterateCable);

void BM_SimultaneousSimplify(benchmark::State& state) {
  const auto c = curve_to_complex(cable_geometric(staircase_curve(torus_alexander(2, 3)), CableParams{2, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(simultaneous_simplify(c));
}
BENCHMARK(BM_SimultaneousSimplify);

void BM_TorsionOrder(benchmark::State& state) {
  const auto c = staircase_from_alexander(torus_alexander(5, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(torsion_order(c));
}
BENCHMARK(BM_TorsionOrder)->Arg(6)->Arg(11)->Arg(21);

void BM_BoundsReport(benchmark::State& state) {
  const auto spec = parse_knot_spec("T(3,5);(2,31);(3,2)");
  for (auto _ : state) benchmark::DoNotOptimize(report(spec));
}
BENCHMARK(BM_BoundsReport);

}  // namespace
BENCHMARK_MAIN();
