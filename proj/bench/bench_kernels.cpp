// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "facering/kernels/monomial_census.hpp"
#include "facering/kernels/subset_profile.hpp"
#include "facering/simplicial.hpp"

namespace {

using namespace facering;

void BM_SubsetProfileSerial(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const auto k = path_complex(r);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::subset_profile_serial(k.facets(), r));
}

void BM_SubsetProfileParallel(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const auto k = path_complex(r);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::subset_profile_parallel(k.facets(), r));
}

void BM_CensusSerial(benchmark::State& state) {
  const auto faces = rp2().faces();
  const auto cap = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::monomial_census_serial(faces, 4, cap));
}

void BM_CensusParallel(benchmark::State& state) {
  const auto faces = rp2().faces();
  const auto cap = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::monomial_census_parallel(faces, 4, cap));
}

}  // namespace

BENCHMARK(BM_SubsetProfileSerial)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetProfileParallel)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
