#include <colorstat/features.hpp>

#include <colorstat/colorspace.hpp>

namespace colorstat {

void ExtractorConfig::validate() const {
    if (tau < 1) throw InvalidArgument("ExtractorConfig: tau must be >= 1");
    if (order < 2) throw InvalidArgument("ExtractorConfig: order must be >= 2");
    if (offsets.empty()) throw InvalidArgument("ExtractorConfig: need at least one offset");
    if (filters.empty()) throw InvalidArgument("ExtractorConfig: need at least one filter");
    for (const Offset& o : offsets) {
        if (o.dx < 0 || o.dy < 0 || (o.dx == 0 && o.dy == 0)) {
            throw InvalidArgument("ExtractorConfig: offsets must be non-negative and nonzero");
        }
    }
}

std::vector<std::size_t> feature_layout(const ExtractorConfig& cfg) {
    cfg.validate();
    const std::size_t rgb = merged_length(8, cfg.order);
    const std::size_t chroma = merged_length(2 * cfg.tau + 1, cfg.order);
    return {rgb, chroma, chroma, chroma, chroma};
}

namespace {

// Mean of the per-(filter, offset) normalized matrices for one group of
// code planes (one plane per filter), then symmetric merge.
std::vector<double> merged_mean(const std::vector<CodePlane>& planes_per_filter,
                                const ExtractorConfig& cfg) {
    CooccurrenceMatrix acc;
    std::size_t count = 0;
    for (const CodePlane& plane : planes_per_filter) {
        for (const Offset& off : cfg.offsets) {
            CooccurrenceMatrix m = cooccurrence(plane, cfg.order, off);
            if (acc.bins.empty()) {
                acc = std::move(m);
            } else {
                for (std::size_t i = 0; i < acc.bins.size(); ++i) acc.bins[i] += m.bins[i];
            }
            ++count;
        }
    }
    for (double& b : acc.bins) b /= static_cast<double>(count);
    return symmetric_merge(acc);
}

}  // namespace

FeatureVector extract(const RgbImage& img, const ExtractorConfig& cfg) {
    cfg.validate();
    img.validate();

    auto [hp, sp, vp] = to_hsv(img);
    auto [yp, cbp, crp] = to_ycbcr(img);
    (void)vp;
    (void)yp;

    // assembled RGB branch: one 8-level plane per filter
    std::vector<CodePlane> rgb_planes;
    rgb_planes.reserve(cfg.filters.size());
    for (FilterKind f : cfg.filters) {
        rgb_planes.push_back(assemble_rgb(binarize(highpass(img.r, f)),
                                          binarize(highpass(img.g, f)),
                                          binarize(highpass(img.b, f))));
    }

    FeatureVector fv;
    fv.segments = feature_layout(cfg);

    std::vector<double> seg = merged_mean(rgb_planes, cfg);
    fv.values.insert(fv.values.end(), seg.begin(), seg.end());

    for (const ImagePlane* plane : {&hp, &sp, &cbp, &crp}) {
        std::vector<CodePlane> chroma_planes;
        chroma_planes.reserve(cfg.filters.size());
        for (FilterKind f : cfg.filters) {
            chroma_planes.push_back(truncate(highpass(*plane, f), cfg.tau));
        }
        seg = merged_mean(chroma_planes, cfg);
        fv.values.insert(fv.values.end(), seg.begin(), seg.end());
    }
    return fv;
}

}  // namespace colorstat
