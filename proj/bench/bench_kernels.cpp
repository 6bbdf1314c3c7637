// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "crankmex/identities.hpp"
#include "crankmex/kernels.hpp"
#include "crankmex/partition.hpp"

using namespace crankmex;

namespace {

std::vector<BigInt> dense_box(int zmax, int qmax, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-1000000, 1000000);
    std::vector<BigInt> v(static_cast<std::size_t>(zmax + 1) * (qmax + 1));
    for (auto& x : v)
        x = d(rng);
    return v;
}

template <bool Parallel>
void BM_ZQMul(benchmark::State& state)
{
    const int b = static_cast<int>(state.range(0));
    const auto x = dense_box(b, b, 1);
    const auto y = dense_box(b, b, 2);
    for (auto _ : state) {
        std::vector<BigInt> out(x.size());
        if constexpr (Parallel)
            kernels::zq_mul_omp(x, y, out, b, b);
        else
            kernels::zq_mul_serial(x, y, out, b, b);
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void BM_CountTable(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto t = Parallel ? count_table(n, Statistic::nonneg_crank) : count_table_serial(n, Statistic::nonneg_crank);
        benchmark::DoNotOptimize(t);
    }
}

void BM_BuildK(benchmark::State& state)
{
    const int b = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_K(b, b));
}

void BM_BuildMClosed(benchmark::State& state)
{
    const int b = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_M_closed(b, b));
}

}  // namespace

BENCHMARK(BM_ZQMul<false>)->Name("zq_mul/serial")->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZQMul<true>)->Name("zq_mul/omp")->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountTable<false>)->Name("count_table/serial")->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountTable<true>)->Name("count_table/omp")->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildK)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildMClosed)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
