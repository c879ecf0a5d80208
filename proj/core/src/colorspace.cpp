#include <colorstat/colorspace.hpp>

#include <algorithm>
#include <cmath>

namespace colorstat {

namespace {

// The conversions are specified in real arithmetic over 8-bit inputs, so
// every output is round(p / q) for integers p, q. Evaluating that directly
// in integers gives the exactly rounded result; doubles would flip the
// frequent exact-half ties depending on operation order.

// round-half-up of p/q for p >= 0, q > 0; equals round-half-away-from-zero
std::uint8_t round_ratio_u8(std::int64_t p, std::int64_t q) {
    const std::int64_t v = (2 * p + q) / (2 * q);
    return static_cast<std::uint8_t>(std::clamp<std::int64_t>(v, 0, 255));
}

}  // namespace

std::tuple<ImagePlane, ImagePlane, ImagePlane> to_hsv(const RgbImage& img) {
    img.validate();
    const int w = img.width(), h = img.height();
    ImagePlane hp(w, h), sp(w, h), vp(w, h);

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int r = img.r.at(x, y);
            const int g = img.g.at(x, y);
            const int b = img.b.at(x, y);
            const int maxc = std::max({r, g, b});
            const int minc = std::min({r, g, b});
            const int delta = maxc - minc;

            // hexcone hue: angle = 60 * (p/delta + 2k) with the usual sector
            // k and negative wrap; H = round(255 * angle / 360) becomes
            // round(255 * (p + 2k*delta [+ 6*delta]) / (6*delta))
            std::uint8_t hue = 0;  // achromatic pixels keep hue 0
            if (delta > 0) {
                std::int64_t num;
                if (maxc == r) {
                    num = g - b;
                    if (num < 0) num += 6LL * delta;
                } else if (maxc == g) {
                    num = (b - r) + 2LL * delta;
                } else {
                    num = (r - g) + 4LL * delta;
                }
                hue = round_ratio_u8(255 * num, 6LL * delta);
            }

            hp.at(x, y) = hue;
            sp.at(x, y) = maxc > 0 ? round_ratio_u8(255LL * delta, maxc) : 0;
            vp.at(x, y) = static_cast<std::uint8_t>(maxc);  // 255 * maxc / 255
        }
    }
    return {std::move(hp), std::move(sp), std::move(vp)};
}

std::tuple<ImagePlane, ImagePlane, ImagePlane> to_ycbcr(const RgbImage& img) {
    img.validate();
    const int w = img.width(), h = img.height();
    ImagePlane yp(w, h), cbp(w, h), crp(w, h);

    // full-range BT.601 with exact decimal coefficients scaled by 10^6
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::int64_t r = img.r.at(x, y);
            const std::int64_t g = img.g.at(x, y);
            const std::int64_t b = img.b.at(x, y);
            const std::int64_t yn = 299000 * r + 587000 * g + 114000 * b;
            const std::int64_t cbn = 128000000 - 168736 * r - 331264 * g + 500000 * b;
            const std::int64_t crn = 128000000 + 500000 * r - 418688 * g - 81312 * b;
            yp.at(x, y) = round_ratio_u8(yn, 1000000);
            cbp.at(x, y) = round_ratio_u8(cbn, 1000000);
            crp.at(x, y) = round_ratio_u8(crn, 1000000);
        }
    }
    return {std::move(yp), std::move(cbp), std::move(crp)};
}

ImagePlane component(const RgbImage& img, ColorComponent c) {
    switch (c) {
        case ColorComponent::R: return img.r;
        case ColorComponent::G: return img.g;
        case ColorComponent::B: return img.b;
        case ColorComponent::H: return std::get<0>(to_hsv(img));
        case ColorComponent::S: return std::get<1>(to_hsv(img));
        case ColorComponent::V: return std::get<2>(to_hsv(img));
        case ColorComponent::Y: return std::get<0>(to_ycbcr(img));
        case ColorComponent::Cb: return std::get<1>(to_ycbcr(img));
        case ColorComponent::Cr: return std::get<2>(to_ycbcr(img));
    }
    throw InvalidArgument("component: unknown color component");
}

}  // namespace colorstat
