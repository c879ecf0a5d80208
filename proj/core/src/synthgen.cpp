#include <colorstat/synthgen.hpp>

#include <colorstat/rng.hpp>

#include <algorithm>
#include <cmath>

namespace colorstat {

namespace {

// seed streams
constexpr std::uint64_t kWeightStream = 0x11;
constexpr std::uint64_t kLatentStream = 0x22;
constexpr std::uint64_t kProxyStream = 0x33;

/// Rational sigmoid with tanh shape: x(27 + x^2)/(27 + 9x^2) on [-3, 3],
/// saturating to +-1 outside. Monotone, exactly +-1 at the joins, and built
/// from IEEE basic operations only.
double tanh_like(double x) {
    if (x >= 3.0) return 1.0;
    if (x <= -3.0) return -1.0;
    const double x2 = x * x;
    return x * (27.0 + x2) / (27.0 + 9.0 * x2);
}

double leaky_relu(double x) { return x > 0.0 ? x : 0.2 * x; }

struct Tensor {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<double> v;

    Tensor(int c, int h, int w)
        : channels(c), height(h), width(w),
          v(static_cast<std::size_t>(c) * h * w, 0.0) {}

    double& at(int c, int y, int x) {
        return v[(static_cast<std::size_t>(c) * height + y) * width + x];
    }
    double at(int c, int y, int x) const {
        return v[(static_cast<std::size_t>(c) * height + y) * width + x];
    }
};

constexpr int kKernel = 4;
constexpr int kStride = 2;
constexpr int kPad = 1;

/// Transpose convolution, kernel 4 / stride 2 / pad 1: doubles each spatial
/// dimension. Scatter form: every input pixel spreads through the kernel.
Tensor transpose_conv(const Tensor& in, const std::vector<double>& w, int out_c,
                      const std::vector<double>& bias) {
    Tensor out(out_c, in.height * 2, in.width * 2);
    for (int oc = 0; oc < out_c; ++oc) {
        for (std::size_t i = 0; i < out.v.size() / static_cast<std::size_t>(out_c); ++i) {
            out.v[static_cast<std::size_t>(oc) * out.height * out.width + i] = bias[static_cast<std::size_t>(oc)];
        }
    }
    // w layout: [ic][oc][ky][kx]
    const auto widx = [&](int ic, int oc, int ky, int kx) {
        return ((static_cast<std::size_t>(ic) * out_c + oc) * kKernel + ky) * kKernel + kx;
    };
    for (int ic = 0; ic < in.channels; ++ic) {
        for (int iy = 0; iy < in.height; ++iy) {
            for (int ix = 0; ix < in.width; ++ix) {
                const double val = in.at(ic, iy, ix);
                for (int ky = 0; ky < kKernel; ++ky) {
                    const int oy = iy * kStride + ky - kPad;
                    if (oy < 0 || oy >= out.height) continue;
                    for (int kx = 0; kx < kKernel; ++kx) {
                        const int ox = ix * kStride + kx - kPad;
                        if (ox < 0 || ox >= out.width) continue;
                        for (int oc = 0; oc < out_c; ++oc) {
                            out.at(oc, oy, ox) += w[widx(ic, oc, ky, kx)] * val;
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::vector<double> gaussian_block(Rng& rng, std::size_t n, double stddev) {
    std::vector<double> w(n);
    for (double& x : w) x = stddev * rng.normal();
    return w;
}

/// All weights of the generator stack, drawn once per spec seed.
struct GeneratorWeights {
    std::vector<double> dense;  // [w0*s0*s0][latent]
    std::vector<double> dense_bias;
    std::vector<double> conv[3];
    std::vector<double> conv_bias[3];
    std::array<int, 4> stage_channels;  // w0, w1, w2, 3
    int s0 = 0;

    GeneratorWeights(const GenSpec& spec) {
        Rng rng(mix_seed(spec.seed, kWeightStream));
        s0 = spec.out_side / 8;
        stage_channels = {spec.widths[0], spec.widths[1], spec.widths[2], 3};

        const std::size_t dense_out =
            static_cast<std::size_t>(spec.widths[0]) * s0 * s0;
        dense = gaussian_block(rng, dense_out * static_cast<std::size_t>(spec.latent_dim),
                               2.0 / std::sqrt(static_cast<double>(spec.latent_dim)));
        dense_bias = gaussian_block(rng, dense_out, 0.2);

        for (int s = 0; s < 3; ++s) {
            const int ic = stage_channels[static_cast<std::size_t>(s)];
            const int oc = stage_channels[static_cast<std::size_t>(s) + 1];
            const double fan_in = static_cast<double>(ic) * kKernel * kKernel / (kStride * kStride);
            conv[s] = gaussian_block(
                rng, static_cast<std::size_t>(ic) * oc * kKernel * kKernel,
                1.0 / std::sqrt(fan_in));
            conv_bias[s] = gaussian_block(rng, static_cast<std::size_t>(oc), 0.05);
        }
    }
};

std::uint8_t to_u8(double activation) {
    // tanh range [-1, 1] mapped onto the 8-bit scale
    const long v = std::lround((activation + 1.0) * 127.5);
    return static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
}

RgbImage run_generator(const GenSpec& spec, const GeneratorWeights& gw, std::size_t index) {
    Rng rng(mix_seed(spec.seed, kLatentStream, index));
    std::vector<double> latent(static_cast<std::size_t>(spec.latent_dim));
    for (double& z : latent) z = rng.normal();
    // coherent per-draw exposure, the global-factor variation a trained
    // generator would carry in its latent space; applied before the output
    // activation, identically to all three channels
    const double gain = 0.35 + 0.5 * rng.uniform01();
    const double shift = 0.3 * rng.normal();

    Tensor t(gw.stage_channels[0], gw.s0, gw.s0);
    for (std::size_t o = 0; o < t.v.size(); ++o) {
        double s = gw.dense_bias[o];
        const std::size_t base = o * static_cast<std::size_t>(spec.latent_dim);
        for (std::size_t k = 0; k < latent.size(); ++k) s += gw.dense[base + k] * latent[k];
        t.v[o] = leaky_relu(s);
    }

    for (int stage = 0; stage < 3; ++stage) {
        t = transpose_conv(t, gw.conv[stage], gw.stage_channels[static_cast<std::size_t>(stage) + 1],
                           gw.conv_bias[stage]);
        if (stage < 2) {
            for (double& x : t.v) x = leaky_relu(x);
        }
    }

    RgbImage img(spec.out_side, spec.out_side);
    for (int y = 0; y < spec.out_side; ++y) {
        for (int x = 0; x < spec.out_side; ++x) {
            img.r.at(x, y) = to_u8(tanh_like(gain * t.at(0, y, x) + shift));
            img.g.at(x, y) = to_u8(tanh_like(gain * t.at(1, y, x) + shift));
            img.b.at(x, y) = to_u8(tanh_like(gain * t.at(2, y, x) + shift));
        }
    }
    return img;
}

// ---------------------------------------------------------------------------
// real-capture proxy
// ---------------------------------------------------------------------------

/// Value noise: random corner grid, bilinear interpolation between corners.
struct NoiseOctave {
    int cells = 0;
    std::vector<double> grid;  // (cells+1)^2 corners in [0,1]

    NoiseOctave(Rng& rng, int cells_) : cells(cells_), grid(static_cast<std::size_t>(cells_ + 1) * (cells_ + 1)) {
        for (double& g : grid) g = rng.uniform01();
    }

    double sample(double u, double v) const {  // u, v in [0, 1]
        const double gu = u * cells;
        const double gv = v * cells;
        const int x0 = std::min(static_cast<int>(gu), cells - 1);
        const int y0 = std::min(static_cast<int>(gv), cells - 1);
        const double fu = gu - x0;
        const double fv = gv - y0;
        const auto at = [&](int yy, int xx) {
            return grid[static_cast<std::size_t>(yy) * (cells + 1) + xx];
        };
        return (at(y0, x0) * (1.0 - fu) + at(y0, x0 + 1) * fu) * (1.0 - fv) +
               (at(y0 + 1, x0) * (1.0 - fu) + at(y0 + 1, x0 + 1) * fu) * fv;
    }
};

double multiscale_texture(const std::vector<NoiseOctave>& octaves, double u, double v) {
    double value = 0.0;
    double amplitude = 1.0;
    double total = 0.0;
    for (const NoiseOctave& o : octaves) {
        value += amplitude * o.sample(u, v);
        total += amplitude;
        amplitude *= 0.5;
    }
    return value / total;  // in [0, 1]
}

RgbImage run_proxy(const ProxySpec& spec, std::size_t index) {
    Rng rng(mix_seed(spec.seed, kProxyStream, index));
    const int side = spec.out_side;

    // coarse-to-fine octaves: cell size halves each octave, floor of 2 cells
    const auto make_octaves = [&](std::vector<NoiseOctave>& out) {
        double cell = spec.texture_scale * 4.0;
        for (int k = 0; k < 4; ++k) {
            const int cells = std::max(2, static_cast<int>(side / cell));
            out.emplace_back(rng, cells);
            cell *= 0.5;
        }
    };
    std::vector<NoiseOctave> luma, chan_r, chan_g, chan_b;
    make_octaves(luma);
    make_octaves(chan_r);
    make_octaves(chan_g);
    make_octaves(chan_b);

    // per-shot exposure: scenes differ in brightness and contrast
    const double spread = 1.0 + 1.4 * rng.uniform01();
    const double offset = 0.15 * rng.normal();

    const double noise_std = std::sqrt(spec.noise_variance);
    const double c = spec.channel_coupling;

    RgbImage img(side, side);
    for (int y = 0; y < side; ++y) {
        const double v = (y + 0.5) / side;
        for (int x = 0; x < side; ++x) {
            const double u = (x + 0.5) / side;
            const double shared = multiscale_texture(luma, u, v);
            const double tr = multiscale_texture(chan_r, u, v);
            const double tg = multiscale_texture(chan_g, u, v);
            const double tb = multiscale_texture(chan_b, u, v);

            const auto emit = [&](double t) {
                const double mixed = (1.0 - c) * t + c * shared;
                const double scene = 255.0 * (0.5 + spread * (mixed - 0.5) + offset);
                const double sample = scene + noise_std * rng.normal();
                return static_cast<std::uint8_t>(std::clamp(std::lround(sample), 0L, 255L));
            };
            img.r.at(x, y) = emit(tr);
            img.g.at(x, y) = emit(tg);
            img.b.at(x, y) = emit(tb);
        }
    }
    return img;
}

}  // namespace

void GenSpec::validate() const {
    if (out_side < 8 || out_side % 8 != 0) {
        throw InvalidArgument("GenSpec: out_side must be a positive multiple of 8");
    }
    if (latent_dim < 1) throw InvalidArgument("GenSpec: latent_dim must be >= 1");
    for (int w : widths) {
        if (w < 1) throw InvalidArgument("GenSpec: widths must be >= 1");
    }
}

void ProxySpec::validate() const {
    if (out_side < 4) throw InvalidArgument("ProxySpec: out_side must be >= 4");
    if (texture_scale <= 0.0) throw InvalidArgument("ProxySpec: texture_scale must be positive");
    if (noise_variance < 0.0) throw InvalidArgument("ProxySpec: noise_variance must be >= 0");
    if (channel_coupling < 0.0 || channel_coupling > 1.0) {
        throw InvalidArgument("ProxySpec: channel_coupling must be in [0, 1]");
    }
}

struct DngGeneratorImpl {
    GeneratorWeights weights;
    explicit DngGeneratorImpl(const GenSpec& spec) : weights(spec) {}
};

DngGenerator::DngGenerator(const GenSpec& spec) : spec_(spec) {
    spec_.validate();
    impl_ = std::make_shared<const DngGeneratorImpl>(spec_);
}

RgbImage DngGenerator::generate(std::size_t index) const {
    return run_generator(spec_, impl_->weights, index);
}

std::vector<RgbImage> generate_dng_like(const GenSpec& spec, std::size_t n) {
    if (n < 1) throw InvalidArgument("generate_dng_like: n must be >= 1");
    const DngGenerator gen(spec);
    std::vector<RgbImage> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(gen.generate(i));
    return out;
}

RgbImage generate_real_proxy_image(const ProxySpec& spec, std::size_t index) {
    spec.validate();
    return run_proxy(spec, index);
}

std::vector<RgbImage> generate_real_proxy(const ProxySpec& spec, std::size_t n) {
    spec.validate();
    if (n < 1) throw InvalidArgument("generate_real_proxy: n must be >= 1");
    std::vector<RgbImage> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(run_proxy(spec, i));
    return out;
}

}  // namespace colorstat
