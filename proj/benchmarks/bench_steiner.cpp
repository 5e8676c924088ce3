#include <benchmark/benchmark.h>

#include "steiner/coloring.hpp"
#include "steiner/construction.hpp"
#include "steiner/oracle.hpp"
#include "steiner/verification.hpp"

using namespace steiner;

namespace {

void BM_BuildS6_12(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_s6_12());
}
BENCHMARK(BM_BuildS6_12);

void BM_BuildS4_8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_s4_8());
}
BENCHMARK(BM_BuildS4_8);

void BM_VerifyS6_12(benchmark::State& state) {
  const auto d = build_s6_12().first;
  for (auto _ : state) benchmark::DoNotOptimize(verify_steiner(d));
}
BENCHMARK(BM_VerifyS6_12);

void BM_SpectrumS6_12(benchmark::State& state) {
  const auto d = build_s6_12().first;
  for (auto _ : state) benchmark::DoNotOptimize(intersection_spectrum(d));
}
BENCHMARK(BM_SpectrumS6_12);

void BM_ColoringCensusS6_12(benchmark::State& state) {
  const auto d = build_s6_12().first;
  for (auto _ : state) benchmark::DoNotOptimize(proper_coloring_census(d));
}
BENCHMARK(BM_ColoringCensusS6_12)->Unit(benchmark::kMillisecond);

void BM_ValidateTables(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(validate_expansion_tables());
}
BENCHMARK(BM_ValidateTables);

void BM_OracleBuild(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  SearchConfig cfg;
  cfg.branch_order = state.range(1) != 0 ? BranchOrder::most_constrained_first : BranchOrder::lexicographic;
  for (auto _ : state) benchmark::DoNotOptimize(exact_cover_build({s, s + 1, 2 * s + 2}, cfg));
}
BENCHMARK(BM_OracleBuild)->Args({3, 1})->Args({3, 0})->Args({5, 1})->Unit(benchmark::kMillisecond);

void BM_IsomorphicS6_12(benchmark::State& state) {
  const auto d = build_s6_12().first;
  std::vector<int> image(12);
  for (int i = 0; i < 12; ++i) image[static_cast<std::size_t>(i)] = (5 * i + 3) % 12;
  const Design target = relabel(d, image);
  for (auto _ : state) benchmark::DoNotOptimize(isomorphic(d, target));
}
BENCHMARK(BM_IsomorphicS6_12);

}  // namespace

BENCHMARK_MAIN();
