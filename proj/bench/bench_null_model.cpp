// Serial reference vs OpenMP null model, and counting vs sort-based h-index.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <functional>

#include "sizebias/bundled.hpp"
#include "sizebias/ingest.hpp"
#include "sizebias/nullmodel.hpp"
#include "sizebias/synth.hpp"

namespace {

using namespace sizebias;

// Synthetic analogue of the 40-unit Ukrainian dataset (about 93k publications).
const Dataset& ukraine_scale() {
    static const Dataset dataset = [] {
        const auto table = parse_summary(*bundled::summary_csv("ukraine_2019"), "ukraine_2019");
        std::vector<std::uint64_t> sizes;
        for (const auto& r : table.rows) sizes.push_back(r.n_publications);
        Rng rng = make_stream(7, StreamDomain::citations, 0);
        return synth::build_synthetic_dataset(sizes, {1.5, 1.0}, rng);
    }();
    return dataset;
}

void BM_NullModelSerial(benchmark::State& state) {
    const ReshuffleConfig config{static_cast<std::size_t>(state.range(0)), 42, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::run_null_model(ukraine_scale(), config));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NullModelSerial)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_NullModelOpenMP(benchmark::State& state) {
    const ReshuffleConfig config{50, 42, static_cast<int>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_null_model(ukraine_scale(), config));
    }
    state.SetItemsProcessed(state.iterations() * 50);
}
BENCHMARK(BM_NullModelOpenMP)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

std::vector<Citations> citations(std::size_t n) {
    Rng rng = make_stream(3, StreamDomain::citations, 1);
    return synth::sample_citations({1.5, 1.0}, n, rng);
}

void BM_HIndexCounting(benchmark::State& state) {
    const auto c = citations(static_cast<std::size_t>(state.range(0)));
    HIndexWorkspace ws;
    for (auto _ : state) benchmark::DoNotOptimize(ws(c));
}
BENCHMARK(BM_HIndexCounting)->Arg(1000)->Arg(20000);

void BM_HIndexSort(benchmark::State& state) {
    const auto c = citations(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto v = c;
        std::sort(v.begin(), v.end(), std::greater<>());
        std::uint64_t h = 0;
        while (h < v.size() && v[h] >= h + 1) ++h;
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_HIndexSort)->Arg(1000)->Arg(20000);

}  // namespace

BENCHMARK_MAIN();
