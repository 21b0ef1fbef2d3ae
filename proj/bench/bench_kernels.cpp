// Serial reference vs OpenMP kernels on desk-scale inputs.
#include <benchmark/benchmark.h>

#include "glinv/invariance.hpp"
#include "glinv/linalg.hpp"
#include "glinv/schurweyl.hpp"

namespace {

using namespace glinv;

void BM_PhiFormSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Permutation rho({2, 3, 4, 5, 6, 1});
  for (auto _ : state) benchmark::DoNotOptimize(phi_form_serial(rho, {3, 3}, n));
}

void BM_PhiFormParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Permutation rho({2, 3, 4, 5, 6, 1});
  for (auto _ : state) benchmark::DoNotOptimize(phi_form(rho, {3, 3}, n));
}

void BM_SpanningSetSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spanning_set_serial({2, 2}, n));
}

void BM_SpanningSetParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spanning_set({2, 2}, n));
}

void BM_LieRowsSerial(benchmark::State& state) {
  auto basis = MonomialBasis::get({static_cast<int>(state.range(0)), 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(lie_operator_rows_serial(*basis));
}

void BM_LieRowsParallel(benchmark::State& state) {
  auto basis = MonomialBasis::get({static_cast<int>(state.range(0)), 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(lie_operator_rows(*basis));
}

}  // namespace

BENCHMARK(BM_PhiFormSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiFormParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpanningSetSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpanningSetParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LieRowsSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LieRowsParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
