// Serial against OpenMP range kernels.

#include <benchmark/benchmark.h>

#include "abelian/sweep.hpp"

namespace {

const abelian::ParrySubstitution& tribonacci() {
    static const auto phi = abelian::ParrySubstitution::simple(3, {1, 1, 1});
    return phi;
}

const abelian::Oracle& oracle() {
    static const abelian::Oracle o(tribonacci(), 2000);
    return o;
}

void BM_OracleSerial(benchmark::State& state) {
    const auto last = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(abelian::oracle_ac_range_serial(oracle(), 1, last));
}

void BM_OracleParallel(benchmark::State& state) {
    const auto last = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(abelian::oracle_ac_range_parallel(oracle(), 1, last));
}

void BM_CodecSerial(benchmark::State& state) {
    const auto last = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(abelian::codec_ac_range_serial(tribonacci(), 1, last));
}

void BM_CodecParallel(benchmark::State& state) {
    const auto last = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(abelian::codec_ac_range_parallel(tribonacci(), 1, last));
}

} // namespace

BENCHMARK(BM_OracleSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CodecSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CodecParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
