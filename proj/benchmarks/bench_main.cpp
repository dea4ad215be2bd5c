#include <benchmark/benchmark.h>

#include "sset/ex.hpp"
#include "sset/prism.hpp"
#include "sset/pullback_horn.hpp"

using namespace sset;

static void BM_Prism(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(prism_pstructure(m, n, m / 2));
}
BENCHMARK(BM_Prism)->Args({2, 2})->Args({3, 3})->Args({4, 4})->Unit(benchmark::kMillisecond);

static void BM_VerifyPrism(benchmark::State& state) {
  const auto cert = prism_pstructure(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(verify_pstructure(cert.structure));
  state.counters["simplices"] = static_cast<double>(cert.structure.ambient->size());
}
BENCHMARK(BM_VerifyPrism)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CompileAndReplay(benchmark::State& state) {
  const auto cert = prism_pstructure(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 1);
  const auto& p = cert.structure;
  for (auto _ : state) {
    const auto pres = compile_presentation(p);
    benchmark::DoNotOptimize(verify_presentation(*p.ambient, p.base, pres));
  }
}
BENCHMARK(BM_CompileAndReplay)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SdHorn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sd_horn_pstructure(n, 0));
}
BENCHMARK(BM_SdHorn)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Equations(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_equations(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Equations)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ExEnumerate(benchmark::State& state) {
  const auto x = boundary(standard(2, 3)).materialize().complex;
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const ExComplex ex(x, bound);
    benchmark::DoNotOptimize(ex.count(bound));
  }
}
BENCHMARK(BM_ExEnumerate)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ExPStructure(benchmark::State& state) {
  const auto x = boundary(standard(2, 3)).materialize().complex;
  const ExComplex ex(x, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ex_pstructure(ex));
}
BENCHMARK(BM_ExPStructure)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_QConstruct(benchmark::State& state) {
  const auto fs = groupoid_projection_fibration(2, FiniteGroupoid::codiscrete(2), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pullback_horn_pstructure(fs, 1));
}
BENCHMARK(BM_QConstruct)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
