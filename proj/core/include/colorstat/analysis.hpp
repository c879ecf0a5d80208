#pragma once

#include <colorstat/histogram.hpp>
#include <colorstat/image.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace colorstat {

/// Class-mean histograms for one component (arithmetic means of per-image
/// normalized histograms).
struct MeanHistogramPair {
    Histogram dng_mean;
    Histogram real_mean;
    std::string component;
};

/// Similarity index: distance of h to the real-class mean over its distance
/// to the DNG-class mean. Throws DegenerateDenominator when h coincides with
/// the DNG mean (zero denominator) rather than clamping.
double similarity_index(const Histogram& h, const MeanHistogramPair& means);

/// Binning convention for similarity-index histograms: uniform bins over
/// [0, max_value], values beyond max_value clamped into the last bin.
struct SiBinning {
    std::size_t bin_count = 50;
    double max_value = 2.5;
};

/// Normalized histogram of a list of similarity indices.
Histogram si_histogram(const std::vector<double>& sis, const SiBinning& spec);

/// Chi-square distance between the SI histograms of the two populations.
/// Symmetric in its list arguments.
double discernibility(const std::vector<double>& real_sis,
                      const std::vector<double>& dng_sis, const SiBinning& spec);

// ---------------------------------------------------------------------------
// Corpus-level discernibility study
// ---------------------------------------------------------------------------

struct StudySpec {
    std::uint64_t seed = 0;
    double mean_fraction = 0.5;  // share of each class used for mean histograms
    SiBinning binning;
};

struct ComponentDiscernibility {
    std::string component;  // "R".."Cr" or "RGB" for the assembled histogram
    double d_chi2 = 0.0;
    Histogram si_real;
    Histogram si_dng;
};

struct StudyReport {
    std::vector<ComponentDiscernibility> components;
    std::size_t mean_real_count = 0;
    std::size_t mean_dng_count = 0;
    std::size_t si_real_count = 0;
    std::size_t si_dng_count = 0;
    std::size_t degenerate_skipped = 0;  // SI evaluations skipped (zero denominator)
    SiBinning binning;
};

using ImageSource = std::function<RgbImage(const std::string& id)>;

/// Two-phase study over a real corpus and a DNG corpus, identified by ids
/// resolved through `load`. Each class is shuffled with the given seed and
/// split by mean_fraction: the first part builds the class-mean histograms,
/// the rest produces similarity indices. Reports d_chi2 for the nine color
/// components plus the 512-bin assembled-RGB histogram. Images whose
/// histogram coincides with the DNG mean are counted and skipped.
StudyReport run_discernibility_study(std::vector<std::string> real_ids,
                                     std::vector<std::string> dng_ids,
                                     const ImageSource& load, const StudySpec& spec);

}  // namespace colorstat
