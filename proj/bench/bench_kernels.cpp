// Serial reference against the OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <cmath>

#include "autoheat/maass_data.hpp"
#include "autoheat/periodization.hpp"
#include "autoheat/synthesis.hpp"

using namespace autoheat;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

const GridPtr& grid() {
    static const GridPtr g = build_grid(load_maass_data(AUTOHEAT_BENCH_DATA), GridOptions{});
    return g;
}

void BM_Synthesis(benchmark::State& state) {
    const CoeffFn u = heat_coefficients(1.0, grid()).coeffs;
    const Exec exec = exec_of(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(synthesize(u, HPoint(0.25, 1.3), exec).value());
    }
}

void BM_Analyze(benchmark::State& state) {
    AnalyzeOptions opts;
    opts.exec = exec_of(state);
    auto fn = [](const HPoint& z) { return std::exp(-z.y()); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze(fn, grid(), opts).coeffs.size());
    }
}

void BM_OracleBox(benchmark::State& state) {
    OracleOptions opts;
    opts.exec = exec_of(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(periodized_oracle(2.0, HPoint(0.25, 1.3), 120.0, opts).value);
    }
}

void BM_OracleBallAtI(benchmark::State& state) {
    OracleOptions opts;
    opts.mode = Enumeration::FrobeniusBall;
    opts.exec = exec_of(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(periodized_oracle(8.0, HPoint(0.0, 1.0), 5000.0, opts).value);
    }
}

}  // namespace

BENCHMARK(BM_Synthesis)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_Analyze)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleBox)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleBallAtI)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
