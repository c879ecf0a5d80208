#pragma once

#include <colorstat/cooccurrence.hpp>
#include <colorstat/residual.hpp>

#include <vector>

namespace colorstat {

/// Extractor parameters. The defaults reproduce the shipped 588-D layout:
/// tau = 2, order 3, both difference filters, offsets (0,1) and (1,0).
struct ExtractorConfig {
    int tau = 2;
    int order = 3;
    std::vector<Offset> offsets = {{0, 1}, {1, 0}};
    std::vector<FilterKind> filters = {FilterKind::Vertical, FilterKind::Horizontal};

    void validate() const;
};

/// Concatenated co-occurrence feature. Layout (default config):
/// [assembled-RGB 288 | H 75 | S 75 | Cb 75 | Cr 75] = 588 values.
/// Each segment is the symmetric merge of a mean of normalized matrices,
/// so each segment sums to 1.
struct FeatureVector {
    std::vector<double> values;
    std::vector<std::size_t> segments;  // lengths, in layout order

    std::size_t dim() const { return values.size(); }
};

/// Segment lengths implied by a config: merged RGB length followed by the
/// four chrominance lengths.
std::vector<std::size_t> feature_layout(const ExtractorConfig& cfg);

/// Full extraction pipeline:
///  - RGB: high-pass each of R,G,B per filter, binarize, assemble into one
///    8-level plane per filter; co-occur at every offset; average the
///    normalized matrices; symmetric merge.
///  - Each of H, S, Cb, Cr: high-pass per filter, truncate at tau,
///    co-occur, average, merge.
/// Averaging happens before merging (the two operations commute).
/// Propagates DimensionTooSmall / PlaneTooSmall from small inputs.
FeatureVector extract(const RgbImage& img, const ExtractorConfig& cfg = {});

}  // namespace colorstat
