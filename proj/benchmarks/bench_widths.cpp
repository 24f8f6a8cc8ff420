#include <benchmark/benchmark.h>

#include "knotwidth/branchwidth.hpp"
#include "knotwidth/bubble.hpp"
#include "knotwidth/json_io.hpp"
#include "knotwidth/reidemeister.hpp"
#include "knotwidth/sphere_sketch.hpp"
#include "knotwidth/torus_map.hpp"

using namespace knotwidth;

namespace {

// p strands, p + 1 twists
void BM_Branchwidth(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const Shadow g = shadow(torus_knot_diagram(p, p + 1));
    for (auto _ : state) benchmark::DoNotOptimize(branchwidth(g));
    state.counters["edges"] = g.num_edges();
}
BENCHMARK(BM_Branchwidth)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);

void BM_SphereCut(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const Shadow g = shadow(torus_knot_diagram(p, p + 1));
    for (auto _ : state) benchmark::DoNotOptimize(spherecut_decomposition(g));
}
BENCHMARK(BM_SphereCut)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
    const Shadow g = shadow(torus_knot_diagram(2, 5));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_branchwidth(g));
}
BENCHMARK(BM_BruteForce)->Unit(benchmark::kMillisecond);

void BM_RandomWalk(benchmark::State& state) {
    const Diagram d = torus_knot_diagram(5, 6);
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(random_walk(d, static_cast<int>(state.range(0)), ++seed, 44));
}
BENCHMARK(BM_RandomWalk)->Arg(10)->Arg(40);

void BM_CrepTorus(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const TorusMap t = torus_embedding_of_torus_knot(p, p + 1);
    for (auto _ : state) benchmark::DoNotOptimize(c_rep_torus(t));
}
BENCHMARK(BM_CrepTorus)->DenseRange(2, 8, 2);

void BM_AnnulusCertificate(benchmark::State& state) {
    DoubleBubbleTrace tr = trace_from_json(read_file(std::string(KNOTW_BENCH_FIXTURES) + "/appendixA.bubbletrace.json"));
    overlay_trace(tr, 4, 5);
    for (auto _ : state) benchmark::DoNotOptimize(find_annulus_certificate(tr, Membrane::m12, 0));
}
BENCHMARK(BM_AnnulusCertificate);

}  // namespace

BENCHMARK_MAIN();
