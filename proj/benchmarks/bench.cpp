#include <benchmark/benchmark.h>
static void placeholder(benchmark::State& s) { for (auto _ : s) {} }
BENCHMARK(placeholder);
BENCHMARK_MAIN();
