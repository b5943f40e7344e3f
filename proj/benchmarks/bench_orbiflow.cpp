#include <random>

#include <benchmark/benchmark.h>

#include "orbiflow/sections.hpp"
#include "orbiflow/snf.hpp"
#include "orbiflow/surgery.hpp"
#include "orbiflow/torusmap.hpp"
#include "orbiflow/trigroup.hpp"

using namespace orbiflow;

static void BM_EnumerateBall(benchmark::State& state) {
    auto G = trigroup::build_group(CaseId::C237);
    for (auto _ : state) benchmark::DoNotOptimize(trigroup::enumerate_elements(G, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateBall)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_Arrangement(benchmark::State& state) {
    auto id = kAllCases[static_cast<std::size_t>(state.range(0))];
    auto G = trigroup::build_group(id);
    auto C = trigroup::curve_system(G, id);
    for (auto _ : state) benchmark::DoNotOptimize(trigroup::build_arrangement(G, C, trigroup::kAdjacencyDepth));
    state.SetLabel(case_name(id));
}
BENCHMARK(BM_Arrangement)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_Adjacency(benchmark::State& state) {
    auto id = kAllCases[static_cast<std::size_t>(state.range(0))];
    auto G = trigroup::build_group(id);
    auto A = trigroup::build_arrangement(G, trigroup::curve_system(G, id), trigroup::kAdjacencyDepth);
    for (auto _ : state) benchmark::DoNotOptimize(trigroup::adjacency_isometries(A));
    state.SetLabel(case_name(id));
}
BENCHMARK(BM_Adjacency)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_SmithNormalForm(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long long> entry(-20, 20);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<IntMatrix> inputs(64, IntMatrix(n, std::vector<long long>(n)));
    for (auto& M : inputs)
        for (auto& row : M)
            for (auto& v : row) v = entry(rng);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(4)->Arg(5);

static void BM_SurgeredH1(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(surgery::verify_theorem_h1());
}
BENCHMARK(BM_SurgeredH1)->Unit(benchmark::kMicrosecond);

static void BM_Trace3Scan(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(torusmap::trace3_scan(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Trace3Scan)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

static void BM_BoundaryWalk(benchmark::State& state) {
    auto S = sections::section(CaseId::C344);
    for (auto _ : state) benchmark::DoNotOptimize(sections::boundary_components(S));
}
BENCHMARK(BM_BoundaryWalk);

BENCHMARK_MAIN();
