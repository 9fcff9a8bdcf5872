#include <benchmark/benchmark.h>

#include "mvv/checks.hpp"

using namespace mvv;

namespace {

void BM_CharTable(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(char_table(n));
    }
}
BENCHMARK(BM_CharTable)->Arg(6)->Arg(8)->Arg(10);

void BM_WTwo(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    auto mus = partitions_up_to(d);
    for (auto _ : state) {
        Scalar acc;
        for (const auto& mu : mus) {
            for (const auto& nu : mus) acc += w_two(mu, nu);
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_WTwo)->Arg(3)->Arg(4);

void BM_AmplitudeNormalize(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(normalize(amplitude_a(1, d, 2)));
    }
}
BENCHMARK(BM_AmplitudeNormalize)->Arg(3)->Arg(4);

void BM_OperatorAmplitude(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(operator_amplitude(1, Leg::B, d, 3));
    }
}
BENCHMARK(BM_OperatorAmplitude)->Arg(4)->Arg(5);

void BM_QdimTable(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qdim_table_csv(d));
    }
}
BENCHMARK(BM_QdimTable)->Arg(4)->Arg(6);

}  // namespace
