#include <colorstat/analysis.hpp>

#include "support/fixtures.hpp"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace colorstat;

namespace {

Histogram make_hist(std::vector<double> bins) {
    Histogram h;
    h.bins = std::move(bins);
    h.normalized = true;
    return h;
}

// independent SI-histogram + chi-square evaluation for the discernibility oracle
double discernibility_oracle(const std::vector<double>& real_sis,
                             const std::vector<double>& dng_sis, std::size_t bins,
                             double max_value) {
    const auto histo = [&](const std::vector<double>& sis) {
        std::vector<double> h(bins, 0.0);
        for (double v : sis) {
            auto i = static_cast<long>(std::floor(v * static_cast<double>(bins) / max_value));
            if (i < 0) i = 0;
            if (i >= static_cast<long>(bins)) i = static_cast<long>(bins) - 1;
            h[static_cast<std::size_t>(i)] += 1.0 / static_cast<double>(sis.size());
        }
        return h;
    };
    const std::vector<double> p = histo(dng_sis);
    const std::vector<double> q = histo(real_sis);
    double d = 0.0;
    for (std::size_t i = 0; i < bins; ++i) {
        if (p[i] + q[i] > 0.0) d += (p[i] - q[i]) * (p[i] - q[i]) / (p[i] + q[i]);
    }
    return 0.5 * d;
}

}  // namespace

TEST_CASE("similarity_index examples") {
    MeanHistogramPair means;
    means.real_mean = make_hist({0.5, 0.5});
    means.dng_mean = make_hist({0.0, 1.0});

    // h equal to the real mean: zero numerator
    CHECK(similarity_index(make_hist({0.5, 0.5}), means) == 0.0);

    // h equal to the DNG mean: degenerate denominator is surfaced
    CHECK_THROWS_AS(similarity_index(make_hist({0.0, 1.0}), means), DegenerateDenominator);

    // two hand-evaluated distances: (1/3) / 1
    CHECK(std::fabs(similarity_index(make_hist({1.0, 0.0}), means) - 1.0 / 3.0) < 1e-12);
}

TEST_CASE("si_histogram clamps overflow into the last bin") {
    const SiBinning binning{50, 2.5};
    const Histogram h = si_histogram({0.01, 1.0, 2.49, 7.5, 100.0}, binning);
    CHECK(h.bin_count() == 50);
    CHECK(std::fabs(h.sum() - 1.0) < 1e-12);
    CHECK(h.bins[49] == doctest::Approx(3.0 / 5.0));  // 2.49, 7.5 and 100 land in the last bin
}

TEST_CASE("discernibility basics") {
    const SiBinning binning{50, 2.5};
    const std::vector<double> sis = {0.2, 0.9, 1.1, 1.4};
    CHECK(discernibility(sis, sis, binning) == 0.0);

    // disjoint support split at 1: distance approaches the maximum
    std::vector<double> lo, hi;
    for (int i = 0; i < 50; ++i) {
        lo.push_back(0.3 + 0.01 * i);
        hi.push_back(1.3 + 0.02 * i);
    }
    CHECK(discernibility(lo, hi, binning) == doctest::Approx(1.0));

    // symmetry under exchanging the lists
    CHECK(discernibility(lo, hi, binning) == doctest::Approx(discernibility(hi, lo, binning)));
}

TEST_CASE("discernibility matches the independent oracle on seeded lists") {
    Rng rng(31);
    std::vector<double> a, b;
    for (int i = 0; i < 400; ++i) {
        a.push_back(rng.uniform(0.0, 3.0));
        b.push_back(rng.uniform(0.5, 2.0));
    }
    const SiBinning binning{50, 2.5};
    CHECK(discernibility(a, b, binning) ==
          doctest::Approx(discernibility_oracle(a, b, 50, 2.5)).epsilon(1e-12));
}

TEST_CASE("discernibility study runs end to end on synthetic families") {
    // two families with different per-channel value distributions
    std::map<std::string, RgbImage> images;
    std::vector<std::string> real_ids, dng_ids;
    for (int i = 0; i < 24; ++i) {
        const auto rid = "real" + std::to_string(i);
        const auto did = "dng" + std::to_string(i);
        images.emplace(rid, testing::make_random_image(100 + static_cast<std::uint64_t>(i), 12, 12));
        // dng family: strongly quantized channels, different histogram shape
        RgbImage img = testing::make_random_image(900 + static_cast<std::uint64_t>(i), 12, 12);
        for (auto& v : img.r.samples) v = static_cast<std::uint8_t>(v / 64 * 64);
        for (auto& v : img.g.samples) v = static_cast<std::uint8_t>(v / 64 * 64);
        for (auto& v : img.b.samples) v = static_cast<std::uint8_t>(v / 64 * 64);
        images.emplace(did, std::move(img));
        real_ids.push_back(rid);
        dng_ids.push_back(did);
    }

    StudySpec spec;
    spec.seed = 9;
    const StudyReport report = run_discernibility_study(
        real_ids, dng_ids, [&](const std::string& id) { return images.at(id); }, spec);

    REQUIRE(report.components.size() == 10);
    CHECK(report.components.back().component == "RGB");
    CHECK(report.mean_real_count == 12);
    CHECK(report.si_real_count == 12);
    for (const ComponentDiscernibility& cd : report.components) {
        CHECK(cd.d_chi2 >= 0.0);
        CHECK(cd.d_chi2 <= 1.0);
        CHECK(cd.si_real.bin_count() == 50);
    }

    // deterministic given the seed
    const StudyReport again = run_discernibility_study(
        real_ids, dng_ids, [&](const std::string& id) { return images.at(id); }, spec);
    for (std::size_t c = 0; c < 10; ++c) {
        CHECK(report.components[c].d_chi2 == again.components[c].d_chi2);
    }
}
