// Serial reference kernels vs their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "cfroots/cf.hpp"
#include "cfroots/generators.hpp"
#include "cfroots/taylor_shift.hpp"

using namespace cfroots;

static void BM_ShiftHorner(benchmark::State& state) {
  Polynomial a = random_squarefree(static_cast<int>(state.range(0)), 64, 1);
  mpz_class c(12345);
  for (auto _ : state) benchmark::DoNotOptimize(taylor_shift_horner(a, c));
}

static void BM_ShiftDnc(benchmark::State& state) {
  Polynomial a = random_squarefree(static_cast<int>(state.range(0)), 64, 1);
  mpz_class c(12345);
  for (auto _ : state) benchmark::DoNotOptimize(taylor_shift_dnc(a, c));
}

static void BM_ShiftDncOmp(benchmark::State& state) {
  Polynomial a = random_squarefree(static_cast<int>(state.range(0)), 64, 1);
  mpz_class c(12345);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(omp::taylor_shift_dnc(a, c, threads));
}

static void BM_IsolateMignotte(benchmark::State& state) {
  Polynomial a = mignotte(static_cast<int>(state.range(0)), 256);
  CfConfig cfg;
  cfg.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(isolate_all(a, cfg));
}

static void BM_IsolateRandom(benchmark::State& state) {
  Polynomial a = random_squarefree(static_cast<int>(state.range(0)), 32, 7);
  CfConfig cfg;
  cfg.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(isolate_all(a, cfg));
}

BENCHMARK(BM_ShiftHorner)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_ShiftDnc)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_ShiftDncOmp)->Args({256, 2})->Args({256, 4})->Args({1024, 2})->Args({1024, 4});
BENCHMARK(BM_IsolateMignotte)->Args({16, 1})->Args({16, 4})->Args({32, 1})->Args({32, 4});
BENCHMARK(BM_IsolateRandom)->Args({48, 1})->Args({48, 4});

BENCHMARK_MAIN();
