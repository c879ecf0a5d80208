#pragma once

#include <colorstat/image.hpp>
#include <colorstat/rng.hpp>

namespace colorstat::testing {

inline RgbImage make_random_image(std::uint64_t seed, int w, int h) {
    Rng rng(seed);
    RgbImage img(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            img.r.at(x, y) = static_cast<std::uint8_t>(rng.below(256));
            img.g.at(x, y) = static_cast<std::uint8_t>(rng.below(256));
            img.b.at(x, y) = static_cast<std::uint8_t>(rng.below(256));
        }
    }
    return img;
}

inline RgbImage make_uniform_image(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    RgbImage img(w, h);
    for (auto& s : img.r.samples) s = r;
    for (auto& s : img.g.samples) s = g;
    for (auto& s : img.b.samples) s = b;
    return img;
}

inline RgbImage hflip(const RgbImage& img) {
    RgbImage out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            out.r.at(x, y) = img.r.at(img.width() - 1 - x, y);
            out.g.at(x, y) = img.g.at(img.width() - 1 - x, y);
            out.b.at(x, y) = img.b.at(img.width() - 1 - x, y);
        }
    }
    return out;
}

inline RgbImage transpose(const RgbImage& img) {
    RgbImage out(img.height(), img.width());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            out.r.at(y, x) = img.r.at(x, y);
            out.g.at(y, x) = img.g.at(x, y);
            out.b.at(y, x) = img.b.at(x, y);
        }
    }
    return out;
}

/// Image tiled from a seeded p x p texture, cropped at (ox, oy), size w x h.
inline RgbImage make_tiled_window(std::uint64_t seed, int period, int ox, int oy, int w, int h) {
    const RgbImage tile = make_random_image(seed, period, period);
    RgbImage out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int tx = (ox + x) % period;
            const int ty = (oy + y) % period;
            out.r.at(x, y) = tile.r.at(tx, ty);
            out.g.at(x, y) = tile.g.at(tx, ty);
            out.b.at(x, y) = tile.b.at(tx, ty);
        }
    }
    return out;
}

}  // namespace colorstat::testing
