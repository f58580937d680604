// Compares the three routes to s_d(n): OpenMP brute force over Dyck paths,
// the serial brute-force reference, and the linear recurrence.

#include <benchmark/benchmark.h>

#include "schroeder/kernels.hpp"
#include "schroeder/sequences.hpp"

using namespace schroeder;

namespace {

constexpr long kBenchBound = 16;

void bf_parallel(benchmark::State& state) {
    long n = state.range(0);
    Rational d(2);
    for (auto _ : state) {
        Rational v = valley_weighted_catalan(d, d + Rational(1), n, {kBenchBound});
        benchmark::DoNotOptimize(v);
    }
}

void bf_serial(benchmark::State& state) {
    long n = state.range(0);
    Rational d(2);
    for (auto _ : state) {
        Rational v = serial::valley_weighted_catalan(d, d + Rational(1), n, {kBenchBound});
        benchmark::DoNotOptimize(v);
    }
}

void recurrence(benchmark::State& state) {
    long n = state.range(0);
    Rational d(2);
    for (auto _ : state) {
        Rational v = sd_recurrence(d, n);
        benchmark::DoNotOptimize(v);
    }
}

void count_parallel(benchmark::State& state) {
    long n = state.range(0);
    for (auto _ : state) {
        Integer v = count_paths(PathClass::small_schroeder, n, {kBenchBound});
        benchmark::DoNotOptimize(v);
    }
}

void count_serial(benchmark::State& state) {
    long n = state.range(0);
    for (auto _ : state) {
        Integer v = serial::count_paths(PathClass::small_schroeder, n, {kBenchBound});
        benchmark::DoNotOptimize(v);
    }
}

}  // namespace

BENCHMARK(bf_parallel)->Arg(10)->Arg(12)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(bf_serial)->Arg(10)->Arg(12)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(recurrence)->Arg(10)->Arg(13)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(count_parallel)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(count_serial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
