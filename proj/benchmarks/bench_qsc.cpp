#include <benchmark/benchmark.h>

#include "qsc/bijection.hpp"
#include "qsc/qsym.hpp"

using namespace qsc;

namespace {

void BM_EnumerateTriangulations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_triangulations(n));
}
BENCHMARK(BM_EnumerateTriangulations)->DenseRange(4, 8);

void BM_EnumerateDyckPaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_dyck_paths(n));
}
BENCHMARK(BM_EnumerateDyckPaths)->DenseRange(4, 8);

void BM_BijectionRoundtrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto triangulations = enumerate_triangulations(n);
  for (auto _ : state)
    for (const Triangulation& t : triangulations)
      benchmark::DoNotOptimize(dyck_to_triangulation(triangulation_to_dyck(t)));
}
BENCHMARK(BM_BijectionRoundtrip)->DenseRange(4, 7);

void BM_BasisPolynomials(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto triangulations = enumerate_triangulations(n);
  for (auto _ : state)
    for (const Triangulation& t : triangulations)
      benchmark::DoNotOptimize(basis_polynomial(t));
}
BENCHMARK(BM_BasisPolynomials)->DenseRange(4, 7);

void BM_IdealGradedBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(ideal_graded_basis(n, n + 1));
}
BENCHMARK(BM_IdealGradedBasis)->DenseRange(2, 5);

void BM_VerifyBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_basis(n));
}
BENCHMARK(BM_VerifyBasis)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
