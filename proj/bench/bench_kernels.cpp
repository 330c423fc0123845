// Serial reference kernels against the OpenMP versions.
// Thread count of the parallel runs is the second benchmark argument.

#include <benchmark/benchmark.h>

#include "dellac/enumerate.hpp"
#include "dellac/flag_index.hpp"

namespace {

using dellac::ConfigurationSet;
using dellac::Family;
using dellac::Statistic;

void BM_InvHistogramSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(dellac::serial::statistic_histogram(ConfigurationSet::All, n, Statistic::Inv));
}

void BM_InvHistogramParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        dellac::statistic_histogram(ConfigurationSet::All, n, Statistic::Inv, threads));
}

void BM_SymmetricEnumerateSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(dellac::serial::enumerate(ConfigurationSet::Symmetric, n));
}

void BM_SymmetricEnumerateParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(dellac::enumerate(ConfigurationSet::Symmetric, n, threads));
}

void BM_CellHistogramSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(dellac::serial::cell_histogram(Family::SpEven, n));
}

void BM_CellHistogramParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(dellac::cell_histogram(Family::SpEven, n, threads));
}

}  // namespace

BENCHMARK(BM_InvHistogramSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InvHistogramParallel)->Args({7, 1})->Args({7, 4})->Args({8, 1})->Args({8, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymmetricEnumerateSerial)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymmetricEnumerateParallel)->Args({9, 1})->Args({9, 4})->Args({10, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CellHistogramSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CellHistogramParallel)->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
