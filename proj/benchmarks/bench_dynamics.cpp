#include <benchmark/benchmark.h>

#include "multibrot/dynamics.hpp"
#include "multibrot/render.hpp"
#include "multibrot/sections.hpp"

namespace {

using multibrot::Complex;
using multibrot::Degree;

void bm_pow_int(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    Complex z{0.7, 0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(z = multibrot::pow_int(z, d) * 1e-3 + Complex{0.7, 0.4});
    }
}
BENCHMARK(bm_pow_int)->Arg(2)->Arg(3)->Arg(12);

void bm_iterate_p_interior(benchmark::State& state) {
    const Degree d{static_cast<int>(state.range(0))};
    const Complex c{0.2, 0.1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(multibrot::iterate_p(d, c, {1000, 1e-9}));
    }
}
BENCHMARK(bm_iterate_p_interior)->Arg(2)->Arg(3)->Arg(7);

void bm_iterate_p_escape(benchmark::State& state) {
    const Degree d{3};
    const Complex c{0.8, 0.8};
    for (auto _ : state) {
        benchmark::DoNotOptimize(multibrot::iterate_p(d, c, {1000, 1e-9}));
    }
}
BENCHMARK(bm_iterate_p_escape);

void bm_compute_grid(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const multibrot::Window window{{0.0, 0.0}, 3.0, 3.0, n, n};
    for (auto _ : state) {
        benchmark::DoNotOptimize(multibrot::compute_grid(Degree{3}, window, {200, 1e-9}));
    }
}
BENCHMARK(bm_compute_grid)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void bm_scan_ray_endpoint(benchmark::State& state) {
    const auto ray = multibrot::RayClass::root_of_minus_unity(Degree{3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(multibrot::scan_ray_endpoint(ray, {10000, 1e-9}, 20));
    }
}
BENCHMARK(bm_scan_ray_endpoint)->Unit(benchmark::kMillisecond);

}  // namespace
