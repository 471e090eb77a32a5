// Microbenchmarks for the hot paths: family construction, arc classification,
// isomorphism search, the homogeneity sweep, and a census slice.

#include <benchmark/benchmark.h>

#include "homodigraph/ball.hpp"
#include "homodigraph/census.hpp"
#include "homodigraph/families.hpp"
#include "homodigraph/familyspec.hpp"
#include "homodigraph/iso.hpp"
#include "homodigraph/reachability.hpp"
#include "homodigraph/symmetry.hpp"

using namespace homodigraph;

static void BM_BuildDlCp3(benchmark::State& state) {
    for (auto _ : state) {
        LabeledBall b = build_family("dl:cp:3@r" + std::to_string(state.range(0)));
        benchmark::DoNotOptimize(b.graph.arc_count());
    }
}
BENCHMARK(BM_BuildDlCp3)->Arg(3)->Arg(4)->Arg(5);

static void BM_BuildMDirect(benchmark::State& state) {
    for (auto _ : state) {
        LabeledBall b = make_m_ball_direct(3, 2, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(b.graph.arc_count());
    }
}
BENCHMARK(BM_BuildMDirect)->Arg(4)->Arg(6)->Arg(8);

static void BM_BuildMPipeline(benchmark::State& state) {
    for (auto _ : state) {
        LabeledBall b = make_m_ball(3, 2, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(b.graph.arc_count());
    }
}
BENCHMARK(BM_BuildMPipeline)->Arg(4)->Arg(6);

static void BM_ArcClasses(benchmark::State& state) {
    LabeledBall b = make_m_ball_direct(3, 2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        ArcClassPartition p = arc_classes(b.graph);
        benchmark::DoNotOptimize(p.class_count());
    }
}
BENCHMARK(BM_ArcClasses)->Arg(4)->Arg(6)->Arg(8);

static void BM_IntersectionDigraph(benchmark::State& state) {
    LabeledBall b = make_m_ball_direct(3, 2, static_cast<int>(state.range(0)));
    ArcClassPartition p = arc_classes(b.graph);
    for (auto _ : state) {
        IntersectionDigraph ix = intersection_digraph(b.graph, p);
        benchmark::DoNotOptimize(ix.graph.vertex_count());
    }
}
BENCHMARK(BM_IntersectionDigraph)->Arg(6)->Arg(8);

static void BM_IsoBalls(benchmark::State& state) {
    LabeledBall a = ball_within(make_m_ball_direct(3, 2, 4), 0, static_cast<int>(state.range(0)));
    LabeledBall y0 = make_y_ball(3, 4);
    LabeledBall y = ball_within(y0, y0.center, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto iso = find_isomorphism_fixing(a.graph, y.graph, IsoMap{{a.center, y.center}});
        benchmark::DoNotOptimize(iso.has_value());
    }
}
BENCHMARK(BM_IsoBalls)->Arg(2)->Arg(3);

static void BM_CHomogeneitySweep(benchmark::State& state) {
    LabeledBall b = build_family("j:2@m6");
    for (auto _ : state) {
        CheckReport r = check_c_homogeneity(b, static_cast<int>(state.range(0)), 2);
        benchmark::DoNotOptimize(r.pairsTested);
    }
}
BENCHMARK(BM_CHomogeneitySweep)->Arg(3)->Arg(4);

static void BM_CensusSlice(benchmark::State& state) {
    for (auto _ : state) {
        CensusReport rep = census_c_homogeneous(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(rep.found.size());
    }
}
BENCHMARK(BM_CensusSlice)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
