// Serial reference vs OpenMP sweeps, and the reciprocity recursion vs the
// defining sum. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>

#include "dedekind/counting.hpp"
#include "dedekind/dedekind_sum.hpp"
#include "dedekind/enumeration.hpp"
#include "dedekind/scan.hpp"
#include "dedekind/sweeps.hpp"

namespace {

using dedekind::Integer;
using dedekind::sweeps::Check;

template <Check C>
void BM_SweepSerial(benchmark::State& state) {
  const auto n_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dedekind::sweeps::serial::run(C, n_max));
  }
}

template <Check C>
void BM_SweepParallel(benchmark::State& state) {
  const auto n_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dedekind::sweeps::parallel::run(C, n_max));
  }
}

BENCHMARK(BM_SweepSerial<Check::counting>)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel<Check::counting>)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial<Check::enumeration>)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel<Check::enumeration>)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial<Check::congruence>)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel<Check::congruence>)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial<Check::dedekind_sums>)->Arg(150)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel<Check::dedekind_sums>)->Arg(150)->Unit(benchmark::kMillisecond);

// Coprime m near n / golden ratio keeps the Euclidean chain long.
Integer unit_near(const Integer& n) {
  Integer m = n * 618 / 1000;
  while (dedekind::gcd(m, n) != 1) ++m;
  return m;
}

void BM_DedekindSum(benchmark::State& state) {
  const Integer n = Integer(1) << state.range(0);
  const Integer m = unit_near(n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(dedekind::dedekind_sum(m, n - 1));
}
BENCHMARK(BM_DedekindSum)->Arg(10)->Arg(20)->Arg(60)->Arg(64)->Arg(128);

void BM_DedekindSumNaive(benchmark::State& state) {
  const Integer n = Integer(1) << state.range(0);
  const Integer m = unit_near(n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(dedekind::dedekind_sum_naive(m, n - 1));
}
BENCHMARK(BM_DedekindSumNaive)->Arg(10)->Arg(14)->Unit(benchmark::kMicrosecond);

void BM_CountClosedForm(benchmark::State& state) {
  const Integer n = state.range(0);
  const Integer m = unit_near(n);
  for (auto _ : state) benchmark::DoNotOptimize(dedekind::count_solutions(m, n));
}
BENCHMARK(BM_CountClosedForm)->Arg(1728)->Arg(1 << 20)->Arg(999'999'937);

void BM_CountScan(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto m = static_cast<std::uint64_t>(unit_near(Integer(n)));
  for (auto _ : state) benchmark::DoNotOptimize(dedekind::scan::count_solutions(m, n));
}
BENCHMARK(BM_CountScan)->Arg(1728)->Arg(1 << 20)->Unit(benchmark::kMicrosecond);

void BM_EnumerateStructured(benchmark::State& state) {
  const Integer n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(dedekind::enumerate_solutions(7, n));
}
BENCHMARK(BM_EnumerateStructured)->Arg(1728)->Arg(1 << 20)->Unit(benchmark::kMicrosecond);

void BM_EnumerateScan(benchmark::State& state) {
  const Integer n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(dedekind::enumerate_solutions_bruteforce(7, n));
}
BENCHMARK(BM_EnumerateScan)->Arg(1728)->Arg(1 << 20)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
