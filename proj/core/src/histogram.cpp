#include <colorstat/histogram.hpp>

namespace colorstat {

double Histogram::sum() const {
    double s = 0.0;
    for (double b : bins) s += b;
    return s;
}

void Histogram::normalize() {
    const double s = sum();
    if (s > 0.0) {
        for (double& b : bins) b /= s;
    }
    normalized = true;
}

Histogram component_histogram(const ImagePlane& p) {
    if (p.samples.empty()) throw InvalidArgument("component_histogram: empty plane");
    Histogram h;
    h.bins.assign(256, 0.0);
    for (std::uint8_t s : p.samples) h.bins[s] += 1.0;
    const double n = static_cast<double>(p.samples.size());
    for (double& b : h.bins) b /= n;
    h.normalized = true;
    return h;
}

Histogram rgb_assembled_histogram(const RgbImage& img) {
    img.validate();
    Histogram h;
    h.bins.assign(512, 0.0);
    for (std::size_t i = 0; i < img.r.samples.size(); ++i) {
        const int qr = img.r.samples[i] / 32;
        const int qg = img.g.samples[i] / 32;
        const int qb = img.b.samples[i] / 32;
        h.bins[static_cast<std::size_t>(qr + 8 * qg + 64 * qb)] += 1.0;
    }
    const double n = static_cast<double>(img.r.samples.size());
    for (double& b : h.bins) b /= n;
    h.normalized = true;
    return h;
}

double chi_square(const Histogram& p, const Histogram& q) {
    if (p.bin_count() != q.bin_count()) {
        throw BinCountMismatch("chi_square: histograms have different bin counts");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < p.bins.size(); ++i) {
        const double s = p.bins[i] + q.bins[i];
        if (s > 0.0) {
            const double diff = p.bins[i] - q.bins[i];
            d += diff * diff / s;
        }
    }
    return 0.5 * d;
}

}  // namespace colorstat
