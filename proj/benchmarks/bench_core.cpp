#include <benchmark/benchmark.h>

#include "bridgecluster/cluster.hpp"
#include "bridgecluster/knot.hpp"
#include "bridgecluster/paths.hpp"

using namespace bridgecluster;

namespace {

ContinuedFraction fibonacci_cf(int n) {
  // [1,1,...,1,2] maximizes the triangle count per denominator
  std::vector<Int> terms(static_cast<std::size_t>(n), Int(1));
  terms.push_back(Int(2));
  return ContinuedFraction(std::move(terms));
}

void BM_build_triangle(benchmark::State& state) {
  ContinuedFraction cf = fibonacci_cf(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_triangle(cf));
}
BENCHMARK(BM_build_triangle)->Arg(8)->Arg(16)->Arg(24);

void BM_enumerate_paths(benchmark::State& state) {
  AncestralTriangle at = build_triangle(fibonacci_cf(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_paths(at));
}
BENCHMARK(BM_enumerate_paths)->Arg(8)->Arg(16)->Arg(20);

void BM_cluster_via_paths(benchmark::State& state) {
  AncestralTriangle at = build_triangle(fibonacci_cf(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(cluster_via_paths(at));
}
BENCHMARK(BM_cluster_via_paths)->Arg(8)->Arg(12)->Arg(16);

void BM_cluster_mutation(benchmark::State& state) {
  ContinuedFraction cf = fibonacci_cf(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cluster_variable(cf));
}
BENCHMARK(BM_cluster_mutation)->Arg(8)->Arg(12)->Arg(16);

void BM_alexander_specialized(benchmark::State& state) {
  ContinuedFraction cf = fibonacci_cf(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(alexander_specialized(cf));
}
BENCHMARK(BM_alexander_specialized)->Arg(8)->Arg(16)->Arg(20);

void BM_skein_oracle(benchmark::State& state) {
  ContinuedFraction cf = fibonacci_cf(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SkeinOracle oracle;  // fresh memo each round
    benchmark::DoNotOptimize(oracle.alexander(cf));
  }
}
BENCHMARK(BM_skein_oracle)->Arg(8)->Arg(16)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
