#pragma once

#include <colorstat/image.hpp>

#include <tuple>

namespace colorstat {

/// Hexcone HSV conversion. H, S, V are quantized to 8-bit: the hue angle in
/// [0, 360) is stored as round(255 * angle / 360), S and V as round(255 * x).
/// Achromatic pixels (max == min) get H = 0.
std::tuple<ImagePlane, ImagePlane, ImagePlane> to_hsv(const RgbImage& img);

/// Full-range BT.601:
///   Y  = 0.299 R + 0.587 G + 0.114 B
///   Cb = 128 - 0.168736 R - 0.331264 G + 0.5 B
///   Cr = 128 + 0.5 R - 0.418688 G - 0.081312 B
/// each rounded to nearest and clamped to [0, 255].
std::tuple<ImagePlane, ImagePlane, ImagePlane> to_ycbcr(const RgbImage& img);

/// Returns the requested component plane, converting on demand.
/// Deterministic: repeated calls return bit-identical planes.
ImagePlane component(const RgbImage& img, ColorComponent c);

}  // namespace colorstat
