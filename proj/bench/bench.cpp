// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "pcollapse/counting.hpp"
#include "pcollapse/kernels.hpp"
#include "pcollapse/search.hpp"

using namespace pcollapse;

namespace {

const TrianglePair kPair = admissible_from_alpha_beta(7, 5).pair();

Integer count(std::int64_t t) { return count_triangle(kPair, t); }

void BM_SamplesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(collect_samples_serial(count, 0, state.range(0)));
}
BENCHMARK(BM_SamplesSerial)->Arg(200)->Arg(800);

void BM_SamplesParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(collect_samples(count, 0, state.range(0)));
}
BENCHMARK(BM_SamplesParallel)->Arg(200)->Arg(800);

void BM_SearchSerial(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t n = 0;
    run_search_serial(state.range(0), [&n](const SearchRecord&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_SearchSerial)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SearchParallel(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t n = 0;
    run_search(state.range(0), [&n](const SearchRecord&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_SearchParallel)->Arg(6)->Unit(benchmark::kMillisecond);

// The same rational triangle through the 128-bit kernel and the exact QuadNumber kernel.
const RationalTriangleParams kRational = RationalTriangleParams::make(7, 11, 5, 12);

void BM_RationalIntegerKernel(benchmark::State& state) {
  Integer out;
  for (auto _ : state) {
    count_rational_triangle_int(kRational, state.range(0), out);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_RationalIntegerKernel)->Arg(1000)->Arg(10000);

void BM_RationalQuadKernel(benchmark::State& state) {
  const TrianglePair pair = kRational.pair();
  for (auto _ : state) benchmark::DoNotOptimize(count_triangle_quad(pair, state.range(0)));
}
BENCHMARK(BM_RationalQuadKernel)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
