#include "cluster_forge/batches.hpp"
#include "cluster_forge/corpus.hpp"
#include "cluster_forge/degeneration.hpp"

#include <benchmark/benchmark.h>

using namespace cf;

namespace {

Exec mode_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_enumerate_markov(benchmark::State& st) {
    auto ex = fixture("markov");
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_gfan(ex, {}, 7, mode_of(st)).cones.size());
}

void BM_separation_a3(benchmark::State& st) {
    auto ex = fixture("a3");
    for (auto _ : st) benchmark::DoNotOptimize(separation_batch(ex, 200, 8, 1, mode_of(st)).pass);
}

void BM_laurent_markov(benchmark::State& st) {
    auto ex = fixture("markov");
    for (auto _ : st) benchmark::DoNotOptimize(laurent_batch(ex, 20, 7, 1, mode_of(st)).pass);
}

void BM_cocycle_a3(benchmark::State& st) {
    auto fam = make_family(fixture("a3"));
    for (auto _ : st) benchmark::DoNotOptimize(cocycle_sweep(fam, 8, nullptr, mode_of(st)).pass);
}

}  // namespace

// argument 0: serial reference, 1: OpenMP
BENCHMARK(BM_enumerate_markov)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_separation_a3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_laurent_markov)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cocycle_a3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
