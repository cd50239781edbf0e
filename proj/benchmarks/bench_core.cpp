#include <benchmark/benchmark.h>

#include <random>

#include "nll/groebner.hpp"
#include "nll/jumping.hpp"
#include "nll/lefschetz.hpp"
#include "nll/matrix.hpp"
#include "nll/predictor.hpp"

using namespace nll;

namespace {

const PrimeField F;

DegreeData ci(int a1, int a2, int a3) { return DegreeData::make({a1, a2, a3}, {0}); }

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const Matrix m = Matrix::random(F, n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

void BM_DrawModule(benchmark::State& state) {
  const auto dd = ci(2, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(draw_generic_module(dd, 1).module.h(1));
}
BENCHMARK(BM_DrawModule)->DenseRange(2, 6);

void BM_MiddleMinors(benchmark::State& state) {
  const auto m = draw_generic_module(ci(2, 2, static_cast<int>(state.range(0))), 1).module;
  for (auto _ : state) benchmark::DoNotOptimize(locus_ideal_at(m, m.degrees().middle_degree()));
}
BENCHMARK(BM_MiddleMinors)->DenseRange(2, 5);

void BM_Buchberger(benchmark::State& state) {
  const auto m = draw_generic_module(ci(2, 2, static_cast<int>(state.range(0))), 1).module;
  const auto I = locus_ideal_at(m, m.degrees().middle_degree());
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(I.generators, F, Ring::Dual));
}
BENCHMARK(BM_Buchberger)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_FullLocus(benchmark::State& state) {
  const auto m = draw_generic_module(ci(2, 3, 3), 1).module;
  for (auto _ : state) benchmark::DoNotOptimize(locus_ideal(m));
}
BENCHMARK(BM_FullLocus)->Unit(benchmark::kMillisecond);

void BM_LineTest(benchmark::State& state) {
  const auto m = draw_generic_module(ci(3, 3, 3), 1).module;
  std::mt19937_64 rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(is_lefschetz(m, random_line(F, rng)));
}
BENCHMARK(BM_LineTest);

void BM_Splitting(benchmark::State& state) {
  const auto m = draw_generic_module(ci(3, 3, 3), 1).module;
  std::mt19937_64 rng(5);
  for (auto _ : state)
    benchmark::DoNotOptimize(splitting_type(restrict(m.presentation(), LinePoint(F, random_line(F, rng)))));
}
BENCHMARK(BM_Splitting);

}  // namespace

BENCHMARK_MAIN();
