#include "trirec/binomials.hpp"
#include "trirec/charpoly.hpp"
#include "trirec/sequences.hpp"

#include <benchmark/benchmark.h>

using namespace trirec;

namespace {

void BM_IterPair(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(iter_pair(RecurrenceParams::fibonacci(), n));
    MulCounter counter;
    iter_pair(RecurrenceParams::fibonacci(), n, &counter);
    state.counters["multiplications"] = static_cast<double>(counter.multiplications);
}
BENCHMARK(BM_IterPair)->RangeMultiplier(4)->Range(64, 16384);

void BM_FastPair(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fast_pair(RecurrenceParams::fibonacci(), n));
    MulCounter counter;
    fast_pair(RecurrenceParams::fibonacci(), n, &counter);
    state.counters["multiplications"] = static_cast<double>(counter.multiplications);
}
BENCHMARK(BM_FastPair)->RangeMultiplier(4)->Range(64, 16384);

void BM_FastPairRational(benchmark::State& state) {
    const RecurrenceParams params{make_rational(3, 7), make_rational(-5, 2)};
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fast_pair(params, n));
}
BENCHMARK(BM_FastPairRational)->RangeMultiplier(4)->Range(64, 4096);

void BM_PhiProduct(benchmark::State& state) {
    const RecurrenceParams params{Rational(3), Rational(2)};
    for (auto _ : state) benchmark::DoNotOptimize(phi_product(params, state.range(0)));
}
BENCHMARK(BM_PhiProduct)->DenseRange(4, 16, 4);

void BM_GaussianBinomial(benchmark::State& state) {
    const long m = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(gaussian_binomial(m, m / 2));
}
BENCHMARK(BM_GaussianBinomial)->RangeMultiplier(2)->Range(8, 64);

void BM_GeneralizedBinomial(benchmark::State& state) {
    const long r = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(generalized_binomial(RecurrenceParams::fibonacci(), r, r / 2));
    }
}
BENCHMARK(BM_GeneralizedBinomial)->DenseRange(8, 24, 8);

}  // namespace
BENCHMARK_MAIN();
