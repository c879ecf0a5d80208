#pragma once

#include <colorstat/image.hpp>

#include <string>

namespace colorstat {

/// Decodes a PNG or JPEG file (identified by magic bytes) to 8-bit RGB.
/// Alpha is dropped, palette images expanded, grayscale replicated to three
/// channels, 16-bit PNG reduced to 8-bit. JPEG uses the library's default
/// baseline decode. Throws UnsupportedFormat for other file types and
/// DecodeError for corrupt data.
RgbImage load_image(const std::string& path);

/// Writes an 8-bit RGB PNG.
void save_png(const std::string& path, const RgbImage& img);

/// Name/version of the decoders in use, recorded in reports.
std::string codec_description();

}  // namespace colorstat
