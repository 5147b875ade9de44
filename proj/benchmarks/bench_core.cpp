#include <benchmark/benchmark.h>

#include "reeskit/oracle.hpp"

using namespace reeskit;

namespace {

IdealParams params_for(int64_t size) {
    // u1 = 1 against u2 = d-1 keeps the floor-differences complementary for a
    // whole period, so the generator count grows linearly with size
    return IdealParams(size, size, 1, size - 1);
}

void BM_CmpBlockOrder(benchmark::State& state) {
    Monomial a = Monomial::make(3, 7, 2, 5, 1);
    Monomial b = Monomial::make(3, 7, 2, 4, 2);
    for (auto _ : state) benchmark::DoNotOptimize(cmp_block_order(a, b));
}
BENCHMARK(BM_CmpBlockOrder);

void BM_MinimalGenerators(benchmark::State& state) {
    IdealParams p = params_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(minimal_generators(p).records.size());
}
BENCHMARK(BM_MinimalGenerators)->Arg(15)->Arg(100)->Arg(1000)->Arg(100000);

void BM_SkipOptimizedIndices(benchmark::State& state) {
    IdealParams p = params_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(skip_optimized_indices(p).size());
}
BENCHMARK(BM_SkipOptimizedIndices)->Arg(1000)->Arg(100000);

void BM_BuildResolution(benchmark::State& state) {
    IdealParams p = params_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_resolution(p).ranks[1]);
}
BENCHMARK(BM_BuildResolution)->Arg(15)->Arg(100)->Arg(1000);

void BM_VerifyComplexMinimal(benchmark::State& state) {
    FreeResolution res = minimalize(build_resolution(params_for(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(verify_complex(res).pass);
}
BENCHMARK(BM_VerifyComplexMinimal)->Arg(15)->Arg(100);

void BM_BruteForceOracle(benchmark::State& state) {
    IdealParams p(15, 13, 9, 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_minimal_generators(p, 6).size());
}
BENCHMARK(BM_BruteForceOracle);

void BM_GbSpolyCertification(benchmark::State& state) {
    GroebnerBasis gb = groebner_basis(params_for(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_gb_spolys(gb).pass);
}
BENCHMARK(BM_GbSpolyCertification)->Arg(15)->Arg(100);

void BM_VerifyInstanceFull(benchmark::State& state) {
    IdealParams p(15, 13, 9, 6);
    for (auto _ : state) benchmark::DoNotOptimize(verify_instance(p).pass);
}
BENCHMARK(BM_VerifyInstanceFull);

} // namespace

BENCHMARK_MAIN();
