#include "fhga/fhnn.hpp"
#include "fhga/ga.hpp"
#include "fhga/pipeline.hpp"
#include "fhga/validity.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>

namespace {

fhga::GrayImage banded_image(std::size_t side) {
    fhga::GrayImage img(side, side);
    fhga::Rng rng(1);
    for (auto& p : img.pixels()) {
        const int mode = static_cast<int>(rng.below(3));
        p = static_cast<std::uint8_t>(std::clamp(40 + 80 * mode + rng.uniform_int(-8, 8), 0, 255));
    }
    return img;
}

const fhga::Histogram& bench_histogram() {
    static const auto h = fhga::compute_histogram(banded_image(256));
    return h;
}

void BM_ComputeHistogram(benchmark::State& state) {
    const auto img = banded_image(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fhga::compute_histogram(img));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(img.size()));
}

void BM_FhnnCluster(benchmark::State& state) {
    fhga::FhnnConfig cfg;
    cfg.seed = 3;
    for (auto _ : state) benchmark::DoNotOptimize(fhga::fhnn_cluster(bench_histogram(), static_cast<std::size_t>(state.range(0)), cfg));
}

void BM_Evolve(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    std::vector<double> seeds;
    for (std::size_t j = 0; j < k; ++j) seeds.push_back(255.0 * (static_cast<double>(j) + 0.5) / static_cast<double>(k));
    fhga::GaConfig cfg;
    cfg.seed = 4;
    for (auto _ : state) benchmark::DoNotOptimize(fhga::evolve(bench_histogram(), seeds, cfg));
}

void BM_ValidityIndex(benchmark::State& state) {
    const std::vector<int> centers{40, 120, 200};
    for (auto _ : state) benchmark::DoNotOptimize(fhga::validity_index(bench_histogram(), centers, {}));
}

void BM_Sweep(benchmark::State& state) {
    const auto img = banded_image(128);
    fhga::SweepConfig cfg;
    cfg.k_max = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fhga::sweep(img, cfg));
}

} // namespace

BENCHMARK(BM_ComputeHistogram)->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_FhnnCluster)->DenseRange(2, 8, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Evolve)->DenseRange(2, 8, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidityIndex);
BENCHMARK(BM_Sweep)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
