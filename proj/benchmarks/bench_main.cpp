#include <benchmark/benchmark.h>

#include "trapcong/classic.hpp"
#include "trapcong/dcong.hpp"
#include "trapcong/icong.hpp"
#include "trapcong/kcong.hpp"

using namespace trapcong;

namespace {

void BM_WitnessOracle(benchmark::State& state) {
    Int n(static_cast<unsigned long>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(witness_oracle(n));
}
BENCHMARK(BM_WitnessOracle)->Arg(91)->Arg(1890)->Arg(720720);

void BM_ClassifyRange(benchmark::State& state) {
    const std::uint64_t hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        std::uint64_t count = 0;
        for (std::uint64_t n = 1; n <= hi; ++n)
            if (classify_prop11(Int(n)).congruent()) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_ClassifyRange)->Arg(1000)->Arg(10000);

void BM_CountStarForms(benchmark::State& state) {
    const std::uint64_t x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_f(x, CountMode::StarForms));
}
BENCHMARK(BM_CountStarForms)->Arg(100000)->Arg(1000000);

void BM_CountG(benchmark::State& state) {
    const std::uint64_t x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_g(x));
}
BENCHMARK(BM_CountG)->Arg(1000000);

void BM_CountTernary(benchmark::State& state) {
    const std::uint64_t m = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_ternary(TernaryForm::F1, m));
}
BENCHMARK(BM_CountTernary)->Arg(499)->Arg(4999);

void BM_PellSolve(benchmark::State& state) {
    auto prob = pell_reduce(Int(state.range(0)), Int(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(pell_solve(prob, 3));
}
BENCHMARK(BM_PellSolve)->Args({2, 1})->Args({13, 2})->Args({18, 4});

void BM_QuarticSearch(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(quartic_search(2, state.range(0)));
}
BENCHMARK(BM_QuarticSearch)->Arg(1000)->Arg(5000);

void BM_CurveDouble(benchmark::State& state) {
    Int n(static_cast<unsigned long>(state.range(0)));
    auto C = d_curves(n, 3 * n);
    PointQ P(Rat(-6 * n * n), Rat(3 * n * n));
    for (auto _ : state) {
        PointQ acc = P;
        for (int i = 0; i < 6; ++i) acc = dbl(C.E, acc);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_CurveDouble)->Arg(1)->Arg(50);

void BM_Thm16Sides(benchmark::State& state) {
    Int n(static_cast<unsigned long>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(thm16_sides(n));
}
BENCHMARK(BM_Thm16Sides)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
