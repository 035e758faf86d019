#include "flagdom/flag_oracle.hpp"

#include <benchmark/benchmark.h>

using namespace flagdom;

namespace {

RealForm form_for(int id) {
    switch (id) {
    case 0: return make_spr(3);
    case 1: return make_sostar(4);
    case 2: return make_sopq(5, 3);
    default: return make_sopq(6, 4);
    }
}

void BM_OracleSerial(benchmark::State &state) {
    auto rf = form_for(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_oracle(rf, false));
    state.SetLabel(rf.name());
}

void BM_OracleParallel(benchmark::State &state) {
    auto rf = form_for(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_oracle(rf, true));
    state.SetLabel(rf.name());
}

} // namespace

BENCHMARK(BM_OracleSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
