#include <benchmark/benchmark.h>

#include "biotcube/biot_stress.hpp"
#include "biotcube/criteria.hpp"
#include "biotcube/cube_solver.hpp"
#include "biotcube/tensor.hpp"

using namespace biotcube;

namespace {

const StiffnessRatio kOne(1.0);

void BM_PrincipalBiot(benchmark::State& state) {
  const PrincipalStretches s(1.3, 0.8, 1.7);
  for (auto _ : state) benchmark::DoNotOptimize(principal_biot(kOne, s));
}
BENCHMARK(BM_PrincipalBiot);

void BM_JacobianDT(benchmark::State& state) {
  const PrincipalStretches s(1.3, 0.8, 1.7);
  for (auto _ : state) benchmark::DoNotOptimize(jacobian_dt(kOne, s));
}
BENCHMARK(BM_JacobianDT);

void BM_SymEigen(benchmark::State& state) {
  const SymMatrix3 s(4, -1, 2, 0.3, -0.7, 1.1);
  for (auto _ : state) benchmark::DoNotOptimize(sym_eigen(s));
}
BENCHMARK(BM_SymEigen);

void BM_ClassifyPoint(benchmark::State& state) {
  const PrincipalStretches s(1.3, 1.3, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(classify_point(kOne, s));
}
BENCHMARK(BM_ClassifyPoint);

void BM_RadialSolution(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(radial_solution(kOne, LoadMagnitude(2.8)));
}
BENCHMARK(BM_RadialSolution);

void BM_NonradialSolutions(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nonradial_solutions(kOne, LoadMagnitude(3.4)));
}
BENCHMARK(BM_NonradialSolutions);

void BM_SolveFullSystem(benchmark::State& state) {
  const PrincipalStretches start(2.3, 1.1, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(solve_full_system(kOne, LoadMagnitude(4), start));
}
BENCHMARK(BM_SolveFullSystem);

void BM_RegionScanTwoEqual(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ScanDomain d = ScanDomain::two_equal({0.5, 3.0}, n);
  for (auto _ : state) benchmark::DoNotOptimize(region_scan(kOne, d, ScanMode::Stability));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n));
}
BENCHMARK(BM_RegionScanTwoEqual)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_TraceBranches(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(trace_branches(kOne, -2, 5, 0.1));
}
BENCHMARK(BM_TraceBranches)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
