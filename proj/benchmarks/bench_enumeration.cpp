#include <benchmark/benchmark.h>

#include "trilat/diophantine.hpp"
#include "trilat/enumeration.hpp"
#include "trilat/families.hpp"

using namespace trilat;

static void BM_CountEt(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    i64 count = 0;
    for (auto _ : state) {
        count = count_et(GridSpec{n}).count;
        benchmark::DoNotOptimize(count);
    }
    state.counters["triangles"] = static_cast<double>(count);
}
BENCHMARK(BM_CountEt)->Arg(4)->Arg(6)->Arg(8)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_CountEtThreads(benchmark::State& state) {
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto res = count_et(GridSpec{12}, threads);
        benchmark::DoNotOptimize(res.count);
    }
}
BENCHMARK(BM_CountEtThreads)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_CountRt(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto res = count_rt(GridSpec{n});
        benchmark::DoNotOptimize(res.count);
    }
}
BENCHMARK(BM_CountRt)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_PrimitiveSolutions(benchmark::State& state) {
    const i64 d = state.range(0);
    for (auto _ : state) {
        auto sols = primitive_solutions(d);
        benchmark::DoNotOptimize(sols.size());
    }
}
BENCHMARK(BM_PrimitiveSolutions)->Arg(101)->Arg(1003)->Unit(benchmark::kMillisecond);

static void BM_BuildFamiliesUpTo(benchmark::State& state) {
    const i64 d_max = state.range(0);
    for (auto _ : state) {
        for (i64 d = 1; d <= d_max; d += 2)
            for (const auto& p : primitive_solutions(d)) {
                auto fam = build_family(p);
                benchmark::DoNotOptimize(fam.coeffs.m_u);
            }
    }
}
BENCHMARK(BM_BuildFamiliesUpTo)->Arg(41)->Arg(101)->Unit(benchmark::kMillisecond);

static void BM_OriginTetraOrbits(benchmark::State& state) {
    const i64 k = state.range(0);
    for (auto _ : state) {
        auto orbits = origin_tetra_orbits(k);
        benchmark::DoNotOptimize(orbits.size());
    }
}
BENCHMARK(BM_OriginTetraOrbits)->Arg(9)->Arg(15)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
