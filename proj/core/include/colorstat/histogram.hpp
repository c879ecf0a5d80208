#pragma once

#include <colorstat/image.hpp>

#include <vector>

namespace colorstat {

/// Fixed-bin frequency vector. When `normalized` is set the entries sum to 1.
struct Histogram {
    std::vector<double> bins;
    bool normalized = false;

    std::size_t bin_count() const { return bins.size(); }
    double sum() const;

    /// Scales entries to sum 1 (no-op on an all-zero histogram).
    void normalize();
};

/// 256-bin normalized histogram over the 8-bit sample values of one plane.
Histogram component_histogram(const ImagePlane& p);

/// Assembled-RGB histogram: each channel quantized to 3 bits
/// (q = floor(v / 32)), bin index q_r + 8*q_g + 64*q_b; 512 bins, normalized.
Histogram rgb_assembled_histogram(const RgbImage& img);

/// Chi-square distance: 0.5 * sum (p - q)^2 / (p + q), bins with p + q = 0
/// contribute 0. Symmetric, in [0, 1] for normalized inputs.
/// Throws BinCountMismatch on differing bin counts.
double chi_square(const Histogram& p, const Histogram& q);

}  // namespace colorstat
