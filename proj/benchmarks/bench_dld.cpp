#include "dld/canonical.hpp"
#include "dld/generators.hpp"
#include "dld/plane_graph.hpp"
#include "dld/shift.hpp"
#include "dld/verify.hpp"

#include <benchmark/benchmark.h>

using namespace dld;

/* the incremental placement phase alone: insertions plus the final
   offset-resolution pass, over a precomputed ordering */
static void bm_placement(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    plane_graph tri = triangulate(embed(gen_maximal_planar(n, 7)));
    canon_order co = canonical_order(tri);
    for (auto _ : state) {
        shift_state st(tri, co);
        st.insert_all();
        grid_drawing d = st.resolve();
        benchmark::DoNotOptimize(d.pos.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(bm_placement)->RangeMultiplier(4)->Range(1000, 256000)->Complexity(benchmark::oN);

/* full pipeline from the abstract graph */
static void bm_draw_planar(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    graph g = gen_maximal_planar(n, 7);
    for (auto _ : state) {
        planar_drawing_result r = draw_planar(g);
        benchmark::DoNotOptimize(r.drawing.pos.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(bm_draw_planar)->RangeMultiplier(4)->Range(1000, 64000)->Complexity(benchmark::oNLogN);

static void bm_canonical_order(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    plane_graph tri = triangulate(embed(gen_maximal_planar(n, 7)));
    for (auto _ : state) {
        canon_order co = canonical_order(tri);
        benchmark::DoNotOptimize(co.order.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(bm_canonical_order)->RangeMultiplier(4)->Range(1000, 64000)->Complexity(benchmark::oNLogN);

static void bm_verify(benchmark::State& state, check_mode mode) {
    int n = static_cast<int>(state.range(0));
    graph g = gen_maximal_planar(n, 7);
    grid_drawing d = draw_planar(g).drawing;
    for (auto _ : state) {
        verify_report rep = check_disk_link(g, d, mode);
        benchmark::DoNotOptimize(rep.is_disk_link);
    }
    state.SetComplexityN(n);
}
BENCHMARK_CAPTURE(bm_verify, bucketed, check_mode::bucketed)
    ->RangeMultiplier(4)
    ->Range(256, 16384)
    ->Complexity(benchmark::oN);
BENCHMARK_CAPTURE(bm_verify, brute_force, check_mode::brute_force)
    ->RangeMultiplier(4)
    ->Range(256, 4096)
    ->Complexity(benchmark::oNSquared);

BENCHMARK_MAIN();
