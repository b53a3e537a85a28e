#include <benchmark/benchmark.h>

#include "tropreal/census.hpp"
#include "tropreal/realize.hpp"

namespace {

using namespace tropreal;

PlaneIdeal symmetric_plane() { return PlaneIdeal::from_forms({{1, 1, 1, 1}}, 0); }

void BM_RationalKernel(benchmark::State& state) {
  ExactMatrix m = ExactMatrix::from_ints(
      {{3, 1, 4, 1, 5, 9, 2, 6}, {5, 3, 5, 8, 9, 7, 9, 3}, {2, 3, 8, 4, 6, 2, 6, 4},
       {3, 3, 8, 3, 2, 7, 9, 5}},
      0);
  for (auto _ : state) benchmark::DoNotOptimize(mat_kernel(m));
}
BENCHMARK(BM_RationalKernel);

void BM_RealizationDimSession(benchmark::State& state) {
  PlaneIdeal plane = symmetric_plane();
  TropicalCurve c = TropicalCurve::from_vectors({{2, 2, 0, 0}, {0, 0, 2, 2}}, 4);
  for (auto _ : state) benchmark::DoNotOptimize(realization_dim(plane, c));
}
BENCHMARK(BM_RealizationDimSession);

void BM_RealizationDimDegree4(benchmark::State& state) {
  PlaneIdeal plane = symmetric_plane();
  TropicalCurve c = TropicalCurve::from_vectors(
      {{4, 1, 0, 0}, {0, 1, 4, 0}, {0, 1, 0, 2}, {0, 1, 0, 1}, {0, 0, 0, 1}}, 4);
  for (auto _ : state) benchmark::DoNotOptimize(realization_dim(plane, c));
}
BENCHMARK(BM_RealizationDimDegree4);

void BM_ObstructionsDegree4(benchmark::State& state) {
  TropicalCurve c = TropicalCurve::from_vectors(
      {{4, 1, 0, 0}, {0, 1, 4, 0}, {0, 1, 0, 2}, {0, 1, 0, 1}, {0, 0, 0, 1}}, 4);
  for (auto _ : state) benchmark::DoNotOptimize(run_all(c, 0));
}
BENCHMARK(BM_ObstructionsDegree4);

void BM_Enumerate(benchmark::State& state) {
  const long long d = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_curves(d));
}
BENCHMARK(BM_Enumerate)->Arg(2)->Arg(3);

void BM_CensusDegree2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_census(2, 0));
}
BENCHMARK(BM_CensusDegree2);

void BM_CensusDegree3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_census(3, 0));
}
BENCHMARK(BM_CensusDegree3)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
