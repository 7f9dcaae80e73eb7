#include <benchmark/benchmark.h>

#include "bvpdn/kernel.hpp"
#include "bvpdn/solver.hpp"

namespace {

using bvpdn::Complex;

void BM_H2(benchmark::State& state) {
    const Complex z{0.3, 0.2};
    Complex zeta{0.1, -0.6};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bvpdn::detail::h2_unchecked(z, zeta, {}));
        zeta *= Complex(0.9999, 0.0001);
    }
}
BENCHMARK(BM_H2);

void BM_H2WithDz(benchmark::State& state) {
    const Complex z{0.3, 0.2};
    Complex zeta{0.1, -0.6};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bvpdn::detail::h2_with_dz_unchecked(z, zeta, {}));
        zeta *= Complex(0.9999, 0.0001);
    }
}
BENCHMARK(BM_H2WithDz);

void BM_ConstantSourceG2(benchmark::State& state) {
    bvpdn::ProblemData one;
    one.g = bvpdn::Source(bvpdn::BihPolynomial({{0, 0, 1.0}}));
    const bvpdn::Solver solver(one);
    for (auto _ : state) benchmark::DoNotOptimize(solver.g2(Complex(0.4, 0.1)));
}
BENCHMARK(BM_ConstantSourceG2)->Unit(benchmark::kMillisecond);

void BM_ValueOnly(benchmark::State& state) {
    const bvpdn::Solver solver(bvpdn::manufacture(bvpdn::BihPolynomial({{2, 2, 1.0}, {3, 1, 0.5}, {1, 0, 1.0}})));
    for (auto _ : state) benchmark::DoNotOptimize(solver.w(Complex(0.4, 0.1)));
}
BENCHMARK(BM_ValueOnly)->Unit(benchmark::kMillisecond);

void BM_SolveAt(benchmark::State& state) {
    const bvpdn::Solver solver(bvpdn::manufacture(bvpdn::BihPolynomial({{2, 2, 1.0}, {3, 1, 0.5}, {1, 0, 1.0}})));
    for (auto _ : state) benchmark::DoNotOptimize(solver.solve_at(Complex(0.4, 0.1)));
}
BENCHMARK(BM_SolveAt)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
