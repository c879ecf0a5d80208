#include <colorstat/features.hpp>

#include "support/fixtures.hpp"
#include "support/reference_extractor.hpp"

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <numeric>

using namespace colorstat;
using testing::make_random_image;
using testing::make_uniform_image;

#ifndef COLORSTAT_TEST_DATA_DIR
#define COLORSTAT_TEST_DATA_DIR "tests/data"
#endif

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    REQUIRE(a.size() == b.size());
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

std::vector<double> segment(const FeatureVector& fv, std::size_t index) {
    std::size_t start = 0;
    for (std::size_t i = 0; i < index; ++i) start += fv.segments[i];
    return {fv.values.begin() + static_cast<std::ptrdiff_t>(start),
            fv.values.begin() + static_cast<std::ptrdiff_t>(start + fv.segments[index])};
}

}  // namespace

TEST_CASE("feature layout is 588 = 288 + 4x75") {
    const FeatureVector fv = extract(make_random_image(42, 12, 10));
    CHECK(fv.dim() == 588);
    REQUIRE(fv.segments == std::vector<std::size_t>{288, 75, 75, 75, 75});

    for (std::size_t s = 0; s < 5; ++s) {
        const std::vector<double> seg = segment(fv, s);
        const double sum = std::accumulate(seg.begin(), seg.end(), 0.0);
        CHECK(std::fabs(sum - 1.0) < 1e-6);
        for (double v : seg) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
}

TEST_CASE("uniform image degenerates to single bins") {
    const FeatureVector fv = extract(make_uniform_image(8, 8, 128, 128, 128));

    // all residuals zero: assembled code 0 everywhere, chain (0,0,0) is the
    // first merged entry of the RGB segment
    const std::vector<double> rgb = segment(fv, 0);
    CHECK(rgb[0] == doctest::Approx(1.0));
    CHECK(std::accumulate(rgb.begin() + 1, rgb.end(), 0.0) == doctest::Approx(0.0));

    // chrominance codes sit at tau: the (tau,tau,tau) palindrome holds all mass
    for (std::size_t s = 1; s < 5; ++s) {
        const std::vector<double> seg = segment(fv, s);
        double mass_at_max = 0.0;
        for (double v : seg) mass_at_max = std::max(mass_at_max, v);
        CHECK(mass_at_max == doctest::Approx(1.0));
        CHECK(std::accumulate(seg.begin(), seg.end(), 0.0) == doctest::Approx(1.0));
    }
}

TEST_CASE("extractor matches the golden file") {
    const RgbImage img = make_random_image(8001, 8, 8);

    std::ifstream golden_in(std::string(COLORSTAT_TEST_DATA_DIR) + "/golden_features_8x8.txt");
    REQUIRE(golden_in.good());
    std::vector<double> golden;
    double v;
    while (golden_in >> v) golden.push_back(v);
    REQUIRE(golden.size() == 588);

    const FeatureVector fv = extract(img);
    CHECK(max_abs_diff(fv.values, golden) <= 1e-12);

    // the golden file itself was produced by the brute-force transcription
    const std::vector<double> ref = reference::extract(img);
    CHECK(max_abs_diff(ref, golden) <= 1e-12);
}

TEST_CASE("extractor equals brute-force reference on seeded images") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const int side = 4 + static_cast<int>(seed) * 3;
        const RgbImage img = make_random_image(1000 + seed, side, side);
        const FeatureVector fv = extract(img);
        const std::vector<double> ref = reference::extract(img);
        CHECK(max_abs_diff(fv.values, ref) <= 1e-12);
    }
}

TEST_CASE("horizontal flip with flip-symmetric filter config") {
    // the vertical filter commutes with a horizontal flip; offset (1,0)
    // chains reverse, which is exactly what the symmetric merge absorbs
    ExtractorConfig cfg;
    cfg.filters = {FilterKind::Vertical};

    for (std::uint64_t seed : {7ULL, 8ULL, 9ULL}) {
        const RgbImage img = make_random_image(seed, 16, 12);
        const FeatureVector a = extract(img, cfg);
        const FeatureVector b = extract(testing::hflip(img), cfg);
        CHECK(max_abs_diff(a.values, b.values) <= 1e-9);
    }
}

TEST_CASE("transpose invariance of the full configuration") {
    // transposing swaps the two filters and the two offsets pairwise
    for (std::uint64_t seed : {17ULL, 18ULL}) {
        const RgbImage img = make_random_image(seed, 14, 14);
        const FeatureVector a = extract(img);
        const FeatureVector b = extract(testing::transpose(img));
        CHECK(max_abs_diff(a.values, b.values) <= 1e-9);
    }
}

TEST_CASE("one-pixel translation on a tiled texture barely moves features") {
    const int period = 32, side = 64;
    const RgbImage w0 = testing::make_tiled_window(5150, period, period, period, side, side);
    const RgbImage w1 = testing::make_tiled_window(5150, period, period + 1, period, side, side);

    const FeatureVector f0 = extract(w0);
    const FeatureVector f1 = extract(w1);

    // N = fewest chain positions over the filter/offset combinations
    std::size_t n_min = SIZE_MAX;
    for (int filter_reduces_h : {1, 0}) {
        const int w = side - (filter_reduces_h ? 0 : 1);
        const int h = side - (filter_reduces_h ? 1 : 0);
        n_min = std::min(n_min, static_cast<std::size_t>((w - 2) * h));
        n_min = std::min(n_min, static_cast<std::size_t>(w * (h - 2)));
    }
    const double tol = 10.0 / static_cast<double>(n_min);
    CHECK(max_abs_diff(f0.values, f1.values) <= tol);
}

TEST_CASE("small planes propagate errors") {
    CHECK_THROWS_AS(extract(make_random_image(1, 3, 3)), PlaneTooSmall);
    CHECK_THROWS_AS(extract(make_random_image(1, 2, 2)), PlaneTooSmall);
    CHECK_NOTHROW(extract(make_random_image(1, 4, 4)));

    ExtractorConfig bad;
    bad.tau = 0;
    CHECK_THROWS_AS(extract(make_random_image(1, 8, 8), bad), InvalidArgument);
}

TEST_CASE("non-default config changes the layout consistently") {
    ExtractorConfig cfg;
    cfg.tau = 1;  // 3 levels: (27 + 9) / 2 = 18 per chrominance segment
    const FeatureVector fv = extract(make_random_image(3, 10, 10), cfg);
    CHECK(fv.segments == std::vector<std::size_t>{288, 18, 18, 18, 18});
    CHECK(fv.dim() == 288 + 4 * 18);
}
