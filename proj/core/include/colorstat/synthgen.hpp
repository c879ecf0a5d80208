#pragma once

#include <colorstat/image.hpp>

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

namespace colorstat {

/// Untrained generator-style source: random latent vectors pushed through a
/// fixed, seeded 3-stage transpose-convolution stack (kernel 4, stride 2),
/// one independent weight group per output channel, tanh-like output
/// activation mapped to [0, 255].
///
/// Determinism: the engine is std::mt19937_64 (bit-exact per the standard),
/// normals come from an Irwin-Hall sum and the activation is a rational
/// approximation, so every arithmetic step is an IEEE-754 basic operation
/// and the output is platform-independent.
struct GenSpec {
    std::uint64_t seed = 0;
    int out_side = 64;  // must be a multiple of 8
    int latent_dim = 16;
    std::array<int, 3> widths = {32, 16, 8};  // stage input channel counts

    void validate() const;
};

/// Capture-style source: smooth multi-scale value-noise textures, a shared
/// luminance texture mixed into each channel (channel coupling), and
/// per-pixel sensor-like noise. Same fixed-precision arithmetic path as
/// GenSpec.
struct ProxySpec {
    std::uint64_t seed = 0;
    int out_side = 64;
    double texture_scale = 8.0;   // coarsest value-noise cell size, pixels
    double noise_variance = 4.0;  // sensor noise, 8-bit units squared
    double channel_coupling = 0.5;

    void validate() const;
};

struct DngGeneratorImpl;

/// Reusable generator: the weight stack is drawn once from the spec seed,
/// after which generate(i) is pure in i and safe to call concurrently.
class DngGenerator {
public:
    explicit DngGenerator(const GenSpec& spec);
    RgbImage generate(std::size_t index) const;

private:
    GenSpec spec_;
    std::shared_ptr<const DngGeneratorImpl> impl_;
};

/// n images from sequential latent draws; image i depends only on
/// (spec.seed, i), so corpora may be generated in parallel per image.
std::vector<RgbImage> generate_dng_like(const GenSpec& spec, std::size_t n);

std::vector<RgbImage> generate_real_proxy(const ProxySpec& spec, std::size_t n);
RgbImage generate_real_proxy_image(const ProxySpec& spec, std::size_t index);

}  // namespace colorstat
