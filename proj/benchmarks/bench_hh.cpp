#include <benchmark/benchmark.h>

#include "machh/constructions.hpp"
#include "machh/double_complex.hpp"

namespace {

using namespace machh;

// Double cohomology along the even-rank family; the argument is r.
void BM_HhRationals(benchmark::State& state) {
  const auto k = k2r_family(static_cast<int>(state.range(0))).complex;
  for (auto _ : state) benchmark::DoNotOptimize(hh_ranks(k).total());
  state.counters["m"] = k.vertex_count();
}
BENCHMARK(BM_HhRationals)->DenseRange(1, 8)->Unit(benchmark::kMillisecond);

void BM_HhPrimeField(benchmark::State& state) {
  const auto k = k2r_family(static_cast<int>(state.range(0))).complex;
  EngineOptions options;
  options.field = FieldSpec::gf(32003);
  for (auto _ : state) benchmark::DoNotOptimize(hh_ranks(k, options).total());
}
BENCHMARK(BM_HhPrimeField)->DenseRange(1, 8)->Unit(benchmark::kMillisecond);

// Additive cohomology only, on cycles of growing length.
void BM_HRanksCycle(benchmark::State& state) {
  const auto k = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h_ranks(k).total());
}
BENCHMARK(BM_HRanksCycle)->DenseRange(6, 14, 2)->Unit(benchmark::kMillisecond);

void BM_SubsetCohomology(benchmark::State& state) {
  const auto k = join(simplex_boundary(static_cast<int>(state.range(0))), cycle(5));
  const RationalField q;
  for (auto _ : state) {
    benchmark::DoNotOptimize(subset_cohomology(q, k, k.vertex_mask()).total_rank());
  }
}
BENCHMARK(BM_SubsetCohomology)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_HhThreads(benchmark::State& state) {
  const auto k = join(cycle(5), cycle(5));
  EngineOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hh_ranks(k, options).total());
}
BENCHMARK(BM_HhThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
