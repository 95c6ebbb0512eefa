#include <benchmark/benchmark.h>

#include "lamina/accordion.hpp"
#include "lamina/gaps.hpp"
#include "lamina/pullback.hpp"
#include "lamina/strip.hpp"

using namespace lamina;

namespace {

const Degree two(2), three(3);

// quadratic pullback of the invariant leaf {1/3,2/3} with the critical diameter {1/4,3/4}
Lamination fixed_leaf(int depth) {
    FullCriticalCollection fcc(two, {Chord(Angle(1, 4), Angle(3, 4))});
    Lamination seed(two, {Chord(Angle(1, 3), Angle(2, 3))});
    return pullback_generate(fcc, seed, depth);
}

void BM_Pullback(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    std::size_t leaves = 0;
    for (auto _ : state) {
        auto lam = fixed_leaf(depth);
        leaves = lam.size();
        benchmark::DoNotOptimize(lam);
    }
    state.counters["leaves"] = static_cast<double>(leaves);
}
BENCHMARK(BM_Pullback)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_CrossingQuery(benchmark::State& state) {
    auto lam = fixed_leaf(static_cast<int>(state.range(0)));
    std::vector<Chord> probes;
    for (int i = 0; i < 64; ++i) probes.emplace_back(Angle(i, 129), Angle(i + 40, 129));
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lam.crossings(probes[k++ % probes.size()]));
    }
    state.counters["leaves"] = static_cast<double>(lam.size());
}
BENCHMARK(BM_CrossingQuery)->DenseRange(6, 10, 2);

void BM_Gaps(benchmark::State& state) {
    auto lam = fixed_leaf(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gaps(lam));
}
BENCHMARK(BM_Gaps)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_CentralStripSweep(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(central_strip_sweep(q));
}
BENCHMARK(BM_CentralStripSweep)->Arg(31)->Arg(63)->Arg(127)->Unit(benchmark::kMillisecond);

void BM_ClassifyAccordion(benchmark::State& state) {
    const Chord a(Angle(1, 80), Angle(3, 80)), x(Angle(1, 40), Angle(3, 40));
    for (auto _ : state) benchmark::DoNotOptimize(classify_accordion(three, a, x));
}
BENCHMARK(BM_ClassifyAccordion);

}  // namespace

BENCHMARK_MAIN();
