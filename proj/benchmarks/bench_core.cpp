#include <benchmark/benchmark.h>

#include "cobinv/equivariant.hpp"

using namespace cobinv;

namespace {

struct Rig {
    FglContext ctx;
    LazardContext laz;
    MRing mring;
    Equivariant equ;
    explicit Rig(int d) : ctx(Config::with_degree(d)), laz(ctx), mring(ctx, laz), equ(mring) {}
};

Rig& rig() {
    static Rig r(8);
    return r;
}

void BM_PolyMul(benchmark::State& state) {
    Rig& r = rig();
    GradedPoly a = r.equ.x_class(5);
    GradedPoly b = r.equ.x_class(6);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul);

void BM_SeriesReversion(benchmark::State& state) {
    Rig& r = rig();
    for (auto _ : state) benchmark::DoNotOptimize(r.ctx.exp_series().comp_inverse());
}
BENCHMARK(BM_SeriesReversion);

void BM_ChernNumberMilnor(benchmark::State& state) {
    Rig& r = rig();
    VarietyPtr H = r.laz.milnor(3, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(chern_number(r.ctx, *H, Partition{3, 2, 1}));
}
BENCHMARK(BM_ChernNumberMilnor);

void BM_DecomposeSwap(benchmark::State& state) {
    Rig& r = rig();
    Fixture f = r.equ.p1xp1_swap();
    for (auto _ : state) benchmark::DoNotOptimize(r.equ.decompose(f));
}
BENCHMARK(BM_DecomposeSwap);

void BM_RealizabilityQuery(benchmark::State& state) {
    Rig& r = rig();
    GradedPoly m = r.equ.x_class(4);
    for (auto _ : state) benchmark::DoNotOptimize(r.equ.is_normal_bundle_class(m));
}
BENCHMARK(BM_RealizabilityQuery);

}  // namespace

BENCHMARK_MAIN();
