#include <benchmark/benchmark.h>

#include "multibrot/constants.hpp"

namespace {

void bm_solve_xi(benchmark::State& state) {
    const double d = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(multibrot::solve_xi(d));
    }
}
BENCHMARK(bm_solve_xi)->Arg(2)->Arg(12)->Arg(100000);

void bm_section_constants(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(multibrot::section_constants(7.0));
    }
}
BENCHMARK(bm_section_constants);

void bm_mu_bruteforce(benchmark::State& state) {
    const int grid = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(multibrot::mu_bruteforce(3.0, grid));
    }
}
BENCHMARK(bm_mu_bruteforce)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
