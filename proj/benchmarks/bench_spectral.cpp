#include <benchmark/benchmark.h>

#include <cmath>

#include <specbound/bounds.hpp>
#include <specbound/detbounds.hpp>
#include <specbound/growth.hpp>
#include <specbound/hmap.hpp>
#include <specbound/linalg.hpp>
#include <specbound/models.hpp>

using namespace specbound;

namespace {

void BM_Eigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto [a, b] = random_pair(n, 42, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(a));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_SingularValues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto [a, b] = random_pair(n, 42, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(singular_values(a));
  state.SetComplexityN(n);
}
BENCHMARK(BM_SingularValues)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_TransformInversion(benchmark::State& state) {
  const HEvaluator h(GrowthFunction::exp_class(1.0, 1.0));
  const double t = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h.h_eval(t));
}
BENCHMARK(BM_TransformInversion)->Arg(4)->Arg(20)->Arg(80);

void BM_MainBound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto [a, b] = random_pair(n, 42, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(main_bound(a, b));
}
BENCHMARK(BM_MainBound)->Arg(4)->Arg(8)->Arg(16);

void BM_DetUpperBounds(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto [a, b] = random_pair(n, 42, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(upper_bound_check(a, b));
}
BENCHMARK(BM_DetUpperBounds)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
