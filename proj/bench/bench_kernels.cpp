// Serial reference kernels against the OpenMP ones.

#include <benchmark/benchmark.h>

#include "tc/bounds.hpp"

using namespace tc;

namespace {

std::shared_ptr<const ArnoldAlgebra> frozen(int n, int m)
{
    auto alg = std::make_shared<ArnoldAlgebra>(build_presentation(n, m));
    alg->freeze();
    return alg;
}

void zcl(benchmark::State& state, Execution exec, PowerMethod method)
{
    const TensorSquare<Rationals> sq(frozen(static_cast<int>(state.range(0)), 3), Rationals{});
    for (auto _ : state)
        benchmark::DoNotOptimize(zero_divisor_cuplength(sq, {exec, method, {}}).length);
}

void barspan(benchmark::State& state, Execution exec)
{
    const TensorSquare<Rationals> sq(frozen(static_cast<int>(state.range(0)), 3), Rationals{});
    for (auto _ : state)
        benchmark::DoNotOptimize(bar_span_length(sq, exec).length);
}

void bar_products(benchmark::State& state, Execution exec)
{
    const TensorSquare<Integers> sq(frozen(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))), Integers{});
    for (auto _ : state)
        benchmark::DoNotOptimize(bar_product_length(sq, exec).length);
}

void report(benchmark::State& state, Execution exec)
{
    ReportOptions opts;
    opts.execution = exec;
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble_report(3, static_cast<int>(state.range(0)), Rationals{}, opts).lower);
}

} // namespace

BENCHMARK_CAPTURE(zcl, serial_bars, Execution::Serial, PowerMethod::GeneratorBars)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(zcl, parallel_bars, Execution::Parallel, PowerMethod::GeneratorBars)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(zcl, serial_full, Execution::Serial, PowerMethod::FullProducts)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(zcl, parallel_full, Execution::Parallel, PowerMethod::FullProducts)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(barspan, serial, Execution::Serial)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(barspan, parallel, Execution::Parallel)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bar_products, serial, Execution::Serial)->Args({5, 3})->Args({5, 4})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bar_products, parallel, Execution::Parallel)->Args({5, 3})->Args({5, 4})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(report, serial, Execution::Serial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(report, parallel, Execution::Parallel)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
