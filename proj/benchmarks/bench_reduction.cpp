#include <benchmark/benchmark.h>

#include "zelred/classical_limit.hpp"
#include "zelred/involution.hpp"
#include "zelred/levels.hpp"
#include "zelred/reduction.hpp"

using namespace zelred;

static void BM_EnumerateIndexSet(benchmark::State& state) {
    const auto s = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_index_set(2, 3, s));
}
BENCHMARK(BM_EnumerateIndexSet)->Arg(12)->Arg(48)->Arg(192);

static void BM_InvoluteSingleSegment(benchmark::State& state) {
    const int s = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(involute_single_segment(Base::unit(), s, 7));
}
BENCHMARK(BM_InvoluteSingleSegment)->Arg(10)->Arg(60);

static void BM_SteinbergConstituents(benchmark::State& state) {
    const auto d = datum_for_shape(2, 3);
    const int s = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(steinberg_constituents(d, s));
}
BENCHMARK(BM_SteinbergConstituents)->Arg(7)->Arg(12)->Arg(24);

static void BM_LubinTateConstituents(benchmark::State& state) {
    const auto d = datum_for_shape(2, 3);
    const int s = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lubin_tate_constituents(d, s, s / 2 + 1));
}
BENCHMARK(BM_LubinTateConstituents)->Arg(8)->Arg(16);

static void BM_JacquetClosure(benchmark::State& state) {
    const auto d = datum_for_shape(2, 3);
    const int s = static_cast<int>(state.range(0));
    for (auto _ : state) {
        GrothElement sum;
        for (const auto& i : enumerate_index_set(d, s)) sum = add(sum, jacquet_constituent(d, s, i, s / 2));
        benchmark::DoNotOptimize(sum == jacquet_expected(d, s, s / 2));
    }
}
BENCHMARK(BM_JacquetClosure)->Arg(8)->Arg(12);

static void BM_Disjointness(benchmark::State& state) {
    const auto d = datum_for_shape(2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(constituents_disjoint(d, 8, 2, 5));
}
BENCHMARK(BM_Disjointness);

static void BM_InductDiagrams(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(induct_diagrams({3, 2, 1}, {2, 1}));
}
BENCHMARK(BM_InductDiagrams);

static void BM_CharacterInnerProduct(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(oracle_induction_multiplicity({2, 1}, {2, 1, 1}, {3, 2, 1, 1}));
}
BENCHMARK(BM_CharacterInnerProduct);

BENCHMARK_MAIN();
