#include <colorstat/classifier.hpp>
#include <colorstat/colorspace.hpp>
#include <colorstat/cooccurrence.hpp>
#include <colorstat/features.hpp>
#include <colorstat/oneclass.hpp>
#include <colorstat/rng.hpp>
#include <colorstat/synthgen.hpp>

#include <benchmark/benchmark.h>

using namespace colorstat;

namespace {

RgbImage bench_image(int side) {
    Rng rng(314159);
    RgbImage img(side, side);
    for (auto& v : img.r.samples) v = static_cast<std::uint8_t>(rng.below(256));
    for (auto& v : img.g.samples) v = static_cast<std::uint8_t>(rng.below(256));
    for (auto& v : img.b.samples) v = static_cast<std::uint8_t>(rng.below(256));
    return img;
}

void BM_ColorConvert(benchmark::State& state) {
    const RgbImage img = bench_image(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(to_hsv(img));
        benchmark::DoNotOptimize(to_ycbcr(img));
    }
    state.SetItemsProcessed(state.iterations() * img.r.samples.size());
}
BENCHMARK(BM_ColorConvert)->Arg(64)->Arg(128);

void BM_Cooccurrence(benchmark::State& state) {
    Rng rng(7);
    CodePlane plane(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 8);
    for (auto& c : plane.codes) c = static_cast<std::uint8_t>(rng.below(8));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cooccurrence(plane, 3, {1, 0}));
    }
    state.SetItemsProcessed(state.iterations() * plane.codes.size());
}
BENCHMARK(BM_Cooccurrence)->Arg(64)->Arg(256);

void BM_Extract(benchmark::State& state) {
    const RgbImage img = bench_image(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract(img));
    }
    state.SetItemsProcessed(state.iterations() * img.r.samples.size());
}
BENCHMARK(BM_Extract)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_SynthDng(benchmark::State& state) {
    GenSpec spec;
    spec.seed = 42;
    spec.out_side = static_cast<int>(state.range(0));
    const DngGenerator gen(spec);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gen.generate(i++));
    }
}
BENCHMARK(BM_SynthDng)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_EnsembleTrain(benchmark::State& state) {
    Rng rng(1);
    const std::size_t n = 250, dim = 588;
    FeatureMatrix x(n, dim);
    std::vector<int> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = i % 2;
        for (std::size_t k = 0; k < dim; ++k) {
            x.at(i, k) = rng.normal() + (y[i] ? 0.3 : 0.0);
        }
    }
    EnsembleConfig cfg;
    cfg.subspace_dim = 96;
    cfg.learner_count = static_cast<std::size_t>(state.range(0));
    cfg.seed = 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(train_ensemble(x, y, cfg));
    }
}
BENCHMARK(BM_EnsembleTrain)->Arg(11)->Arg(51)->Unit(benchmark::kMillisecond);

void BM_OneClassTrain(benchmark::State& state) {
    Rng rng(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    FeatureMatrix x(n, 588);
    for (double& v : x.data) v = rng.normal();
    const double gamma = 1.0 / (2.0 * 588.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(train_oneclass(x, 0.1, gamma));
    }
}
BENCHMARK(BM_OneClassTrain)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
