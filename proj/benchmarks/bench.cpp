#include <benchmark/benchmark.h>
#include <wordint/matching.hpp>
#include <wordint/surface.hpp>
#include <wordint/weingarten.hpp>
#include <wordint/word.hpp>

using namespace wordint;

static void BM_EnumerateMatchings(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto ms = enumerate_matchings(k, 8);
        benchmark::DoNotOptimize(ms);
    }
}
BENCHMARK(BM_EnumerateMatchings)->Arg(3)->Arg(5)->Arg(7);

static void BM_SurfaceBuild(benchmark::State& state) {
    Word w = parse_word("[a,b]^2");
    auto systems = enumerate_matchings(2);  // each generator has L = 2
    for (auto _ : state) {
        MatchingSystem sys;
        sys.chains[1] = {systems[0], systems[1]};
        sys.chains[2] = {systems[1], systems[2]};
        auto d = build_surface({w}, sys);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_SurfaceBuild);

static void BM_WeingartenTable(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        WeingartenEngine eng("", 5);  // no cache dir: recompute each time
        auto& t = eng.table('O', k);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_WeingartenTable)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
