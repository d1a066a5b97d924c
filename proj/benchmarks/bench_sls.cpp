#include <benchmark/benchmark.h>

#include "sls/builders.hpp"
#include "sls/sim.hpp"
#include "sls/surgery.hpp"

using namespace sls;

namespace {

MergeResult corpus_merge(const SubsystemCode& a, const SubsystemCode& b, bool ancillas) {
    CodeAnalysis an_a = analyze(a), an_b = analyze(b);
    auto la = boundary_logical(a, an_a, Side::Right, 0, 'Z');
    auto lb = boundary_logical(b, an_b, Side::Left, 0, 'Z');
    return build_merged_code(MergeSpec{a, b, *la, *lb, ancillas});
}

void BM_AnalyzeSurface(benchmark::State& state) {
    SubsystemCode sc = build_surface_code(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(analyze(sc));
}
BENCHMARK(BM_AnalyzeSurface)->Arg(3)->Arg(5)->Arg(7);

void BM_DistanceOracle(benchmark::State& state) {
    SubsystemCode sc = build_surface_code(int(state.range(0)));
    CodeAnalysis an = analyze(sc);
    for (auto _ : state)
        benchmark::DoNotOptimize(distance(sc, an, std::size_t(state.range(0))));
}
BENCHMARK(BM_DistanceOracle)->Arg(3)->Arg(5);

void BM_DistanceMergedSsc(benchmark::State& state) {
    MergeResult mr = corpus_merge(build_subsystem_surface_code(3),
                                  build_subsystem_surface_code(3), false);
    CodeAnalysis an = analyze(mr.merged);
    for (auto _ : state) benchmark::DoNotOptimize(distance(mr.merged, an, 3));
}
BENCHMARK(BM_DistanceMergedSsc);

void BM_BuildMerge(benchmark::State& state) {
    SubsystemCode a = build_color_code(3);
    SubsystemCode b = build_surface_code(3);
    for (auto _ : state) benchmark::DoNotOptimize(corpus_merge(a, b, true));
}
BENCHMARK(BM_BuildMerge);

void BM_VerifyMerge(benchmark::State& state) {
    MergeResult mr = corpus_merge(build_color_code(3), build_surface_code(3), true);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_merged_parameters(mr, 3));
        benchmark::DoNotOptimize(verify_lemma2(mr));
    }
}
BENCHMARK(BM_VerifyMerge);

void BM_Teleport(benchmark::State& state) {
    MergeResult mr = corpus_merge(build_color_code(3), build_surface_code(3), true);
    uint64_t seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(teleport(mr, Eigenstate::Yp, seed++, 2));
}
BENCHMARK(BM_Teleport);

void BM_MeasurePauli(benchmark::State& state) {
    SubsystemCode sc = build_surface_code(5);
    CodeAnalysis an = analyze(sc);
    StabilizerState st = encode(sc, an, {Eigenstate::Xp}, {}, 2);
    const PauliOperator& z = an.logical_pairs[0].z_like;
    for (auto _ : state) benchmark::DoNotOptimize(st.measure(z, "bench"));
}
BENCHMARK(BM_MeasurePauli);

}  // namespace

BENCHMARK_MAIN();
