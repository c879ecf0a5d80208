#pragma once

#include <colorstat/errors.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace colorstat {

/// One 8-bit color component plane. Row-major: index = y * width + x,
/// where x is the column and y is the row.
struct ImagePlane {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples;

    ImagePlane() = default;
    ImagePlane(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), samples(static_cast<std::size_t>(w) * h, fill) {
        if (w <= 0 || h <= 0) throw InvalidArgument("ImagePlane: non-positive dimensions");
    }

    std::uint8_t at(int x, int y) const {
        return samples[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return samples[static_cast<std::size_t>(y) * width + x];
    }
    std::size_t pixel_count() const { return samples.size(); }

    bool operator==(const ImagePlane&) const = default;
};

/// Signed residual plane produced by high-pass filtering; value_range is the
/// declared [lo, hi] envelope, every sample lies inside it.
struct ResidualPlane {
    int width = 0;
    int height = 0;
    int lo = 0;
    int hi = 0;
    std::vector<std::int16_t> samples;

    ResidualPlane() = default;
    ResidualPlane(int w, int h, int lo_, int hi_)
        : width(w), height(h), lo(lo_), hi(hi_),
          samples(static_cast<std::size_t>(w) * h, 0) {
        if (w <= 0 || h <= 0) throw InvalidArgument("ResidualPlane: non-positive dimensions");
    }

    std::int16_t at(int x, int y) const {
        return samples[static_cast<std::size_t>(y) * width + x];
    }
    std::int16_t& at(int x, int y) {
        return samples[static_cast<std::size_t>(y) * width + x];
    }
};

/// Plane of small integer codes in [0, levels); the co-occurrence input.
struct CodePlane {
    int width = 0;
    int height = 0;
    int levels = 0;
    std::vector<std::uint8_t> codes;

    CodePlane() = default;
    CodePlane(int w, int h, int levels_)
        : width(w), height(h), levels(levels_),
          codes(static_cast<std::size_t>(w) * h, 0) {
        if (w <= 0 || h <= 0) throw InvalidArgument("CodePlane: non-positive dimensions");
        if (levels_ < 2) throw InvalidArgument("CodePlane: levels must be >= 2");
    }

    std::uint8_t at(int x, int y) const {
        return codes[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return codes[static_cast<std::size_t>(y) * width + x];
    }
};

/// Decoded 8-bit RGB image. All three planes share identical dimensions.
/// Any positive size is representable; operations that need residual pairs
/// (high-pass filtering, extraction) enforce their own minimum dimensions.
struct RgbImage {
    ImagePlane r, g, b;

    RgbImage() = default;
    RgbImage(ImagePlane r_, ImagePlane g_, ImagePlane b_)
        : r(std::move(r_)), g(std::move(g_)), b(std::move(b_)) {
        validate();
    }
    RgbImage(int w, int h) : r(w, h), g(w, h), b(w, h) { validate(); }

    int width() const { return r.width; }
    int height() const { return r.height; }

    void validate() const {
        if (r.width != g.width || r.width != b.width ||
            r.height != g.height || r.height != b.height) {
            throw DimensionMismatch("RgbImage: component planes differ in size");
        }
        if (r.width < 1 || r.height < 1) {
            throw DimensionTooSmall("RgbImage: empty image");
        }
    }

    bool operator==(const RgbImage&) const = default;
};

/// The nine color components the pipeline can produce from an RGB image.
enum class ColorComponent { R, G, B, H, S, V, Y, Cb, Cr };

inline const char* to_string(ColorComponent c) {
    switch (c) {
        case ColorComponent::R: return "R";
        case ColorComponent::G: return "G";
        case ColorComponent::B: return "B";
        case ColorComponent::H: return "H";
        case ColorComponent::S: return "S";
        case ColorComponent::V: return "V";
        case ColorComponent::Y: return "Y";
        case ColorComponent::Cb: return "Cb";
        case ColorComponent::Cr: return "Cr";
    }
    return "?";
}

inline constexpr ColorComponent kAllComponents[9] = {
    ColorComponent::R,  ColorComponent::G, ColorComponent::B,
    ColorComponent::H,  ColorComponent::S, ColorComponent::V,
    ColorComponent::Y,  ColorComponent::Cb, ColorComponent::Cr,
};

}  // namespace colorstat
