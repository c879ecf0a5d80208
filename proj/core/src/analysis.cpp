#include <colorstat/analysis.hpp>

#include <colorstat/colorspace.hpp>
#include <colorstat/rng.hpp>

#include <algorithm>
#include <array>
#include <cmath>

namespace colorstat {

double similarity_index(const Histogram& h, const MeanHistogramPair& means) {
    const double num = chi_square(h, means.real_mean);
    const double den = chi_square(h, means.dng_mean);
    if (den <= 0.0) {
        throw DegenerateDenominator("similarity_index: histogram equals the DNG mean");
    }
    return num / den;
}

Histogram si_histogram(const std::vector<double>& sis, const SiBinning& spec) {
    if (spec.bin_count == 0 || spec.max_value <= 0.0) {
        throw InvalidArgument("si_histogram: bad binning spec");
    }
    Histogram h;
    h.bins.assign(spec.bin_count, 0.0);
    const double width = spec.max_value / static_cast<double>(spec.bin_count);
    for (double v : sis) {
        auto idx = static_cast<std::size_t>(std::max(0.0, std::floor(v / width)));
        if (idx >= spec.bin_count) idx = spec.bin_count - 1;  // clamp overflow into last bin
        h.bins[idx] += 1.0;
    }
    h.normalize();
    return h;
}

double discernibility(const std::vector<double>& real_sis,
                      const std::vector<double>& dng_sis, const SiBinning& spec) {
    if (real_sis.empty() || dng_sis.empty()) {
        throw InvalidArgument("discernibility: SI lists must be nonempty");
    }
    return chi_square(si_histogram(real_sis, spec), si_histogram(dng_sis, spec));
}

// ---------------------------------------------------------------------------
// Study driver
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kStudyComponents = 10;  // 9 components + assembled RGB

const char* study_component_name(std::size_t i) {
    static constexpr const char* names[kStudyComponents] = {
        "R", "G", "B", "H", "S", "V", "Y", "Cb", "Cr", "RGB"};
    return names[i];
}

// All ten per-image histograms, at the cost of one HSV and one YCbCr pass.
std::array<Histogram, kStudyComponents> study_histograms(const RgbImage& img) {
    auto [h, s, v] = to_hsv(img);
    auto [y, cb, cr] = to_ycbcr(img);
    return {component_histogram(img.r), component_histogram(img.g),
            component_histogram(img.b), component_histogram(h),
            component_histogram(s),     component_histogram(v),
            component_histogram(y),     component_histogram(cb),
            component_histogram(cr),    rgb_assembled_histogram(img)};
}

void accumulate(std::array<Histogram, kStudyComponents>& acc,
                const std::array<Histogram, kStudyComponents>& h) {
    for (std::size_t i = 0; i < kStudyComponents; ++i) {
        if (acc[i].bins.empty()) {
            acc[i] = h[i];
        } else {
            for (std::size_t b = 0; b < acc[i].bins.size(); ++b) {
                acc[i].bins[b] += h[i].bins[b];
            }
        }
    }
}

void divide(std::array<Histogram, kStudyComponents>& acc, std::size_t n) {
    for (auto& hist : acc) {
        for (double& b : hist.bins) b /= static_cast<double>(n);
        hist.normalized = true;
    }
}

}  // namespace

StudyReport run_discernibility_study(std::vector<std::string> real_ids,
                                     std::vector<std::string> dng_ids,
                                     const ImageSource& load, const StudySpec& spec) {
    if (spec.mean_fraction <= 0.0 || spec.mean_fraction >= 1.0) {
        throw InvalidArgument("run_discernibility_study: mean_fraction must be in (0,1)");
    }
    Rng real_rng(mix_seed(spec.seed, 0));
    Rng dng_rng(mix_seed(spec.seed, 1));
    real_rng.shuffle(real_ids);
    dng_rng.shuffle(dng_ids);

    const auto split_point = [&](std::size_t n) {
        auto k = static_cast<std::size_t>(
            std::ceil(spec.mean_fraction * static_cast<double>(n)));
        return std::min(k, n);
    };
    const std::size_t real_mean_n = split_point(real_ids.size());
    const std::size_t dng_mean_n = split_point(dng_ids.size());
    if (real_mean_n == 0 || dng_mean_n == 0 || real_mean_n == real_ids.size() ||
        dng_mean_n == dng_ids.size()) {
        throw InvalidArgument("run_discernibility_study: both phases need images in both classes");
    }

    // phase 1: class-mean histograms
    std::array<Histogram, kStudyComponents> real_mean{}, dng_mean{};
    for (std::size_t i = 0; i < real_mean_n; ++i) {
        accumulate(real_mean, study_histograms(load(real_ids[i])));
    }
    for (std::size_t i = 0; i < dng_mean_n; ++i) {
        accumulate(dng_mean, study_histograms(load(dng_ids[i])));
    }
    divide(real_mean, real_mean_n);
    divide(dng_mean, dng_mean_n);

    // phase 2: similarity indices on the remaining images
    std::array<MeanHistogramPair, kStudyComponents> pairs;
    for (std::size_t c = 0; c < kStudyComponents; ++c) {
        pairs[c] = {dng_mean[c], real_mean[c], study_component_name(c)};
    }

    std::array<std::vector<double>, kStudyComponents> real_sis, dng_sis;
    std::size_t degenerate = 0;

    const auto collect = [&](const std::vector<std::string>& ids, std::size_t from,
                             std::array<std::vector<double>, kStudyComponents>& out) {
        for (std::size_t i = from; i < ids.size(); ++i) {
            const auto hists = study_histograms(load(ids[i]));
            for (std::size_t c = 0; c < kStudyComponents; ++c) {
                try {
                    out[c].push_back(similarity_index(hists[c], pairs[c]));
                } catch (const DegenerateDenominator&) {
                    ++degenerate;
                }
            }
        }
    };
    collect(real_ids, real_mean_n, real_sis);
    collect(dng_ids, dng_mean_n, dng_sis);

    StudyReport report;
    report.mean_real_count = real_mean_n;
    report.mean_dng_count = dng_mean_n;
    report.si_real_count = real_ids.size() - real_mean_n;
    report.si_dng_count = dng_ids.size() - dng_mean_n;
    report.degenerate_skipped = degenerate;
    report.binning = spec.binning;

    for (std::size_t c = 0; c < kStudyComponents; ++c) {
        ComponentDiscernibility cd;
        cd.component = study_component_name(c);
        cd.si_real = si_histogram(real_sis[c], spec.binning);
        cd.si_dng = si_histogram(dng_sis[c], spec.binning);
        cd.d_chi2 = chi_square(cd.si_dng, cd.si_real);
        report.components.push_back(std::move(cd));
    }
    return report;
}

}  // namespace colorstat
