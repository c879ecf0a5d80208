#include <colorstat/residual.hpp>

#include <algorithm>

namespace colorstat {

ResidualPlane highpass(const ImagePlane& plane, FilterKind f) {
    if (f == FilterKind::Horizontal) {
        if (plane.width < 2) throw DimensionTooSmall("highpass: width < 2");
        ResidualPlane out(plane.width - 1, plane.height, -255, 255);
        for (int y = 0; y < out.height; ++y) {
            for (int x = 0; x < out.width; ++x) {
                out.at(x, y) = static_cast<std::int16_t>(
                    static_cast<int>(plane.at(x, y)) - static_cast<int>(plane.at(x + 1, y)));
            }
        }
        return out;
    }
    if (plane.height < 2) throw DimensionTooSmall("highpass: height < 2");
    ResidualPlane out(plane.width, plane.height - 1, -255, 255);
    for (int y = 0; y < out.height; ++y) {
        for (int x = 0; x < out.width; ++x) {
            out.at(x, y) = static_cast<std::int16_t>(
                static_cast<int>(plane.at(x, y)) - static_cast<int>(plane.at(x, y + 1)));
        }
    }
    return out;
}

CodePlane binarize(const ResidualPlane& r) {
    CodePlane out(r.width, r.height, 2);
    for (std::size_t i = 0; i < r.samples.size(); ++i) {
        out.codes[i] = r.samples[i] > 0 ? 1 : 0;
    }
    return out;
}

CodePlane assemble_rgb(const CodePlane& rb, const CodePlane& gb, const CodePlane& bb) {
    if (rb.width != gb.width || rb.width != bb.width ||
        rb.height != gb.height || rb.height != bb.height) {
        throw DimensionMismatch("assemble_rgb: plane dimensions differ");
    }
    if (rb.levels != 2 || gb.levels != 2 || bb.levels != 2) {
        throw InvalidArgument("assemble_rgb: inputs must be binary planes");
    }
    CodePlane out(rb.width, rb.height, 8);
    for (std::size_t i = 0; i < out.codes.size(); ++i) {
        out.codes[i] = static_cast<std::uint8_t>(rb.codes[i] + 2 * gb.codes[i] + 4 * bb.codes[i]);
    }
    return out;
}

CodePlane truncate(const ResidualPlane& r, int tau) {
    if (tau < 1) throw InvalidArgument("truncate: tau must be >= 1");
    CodePlane out(r.width, r.height, 2 * tau + 1);
    for (std::size_t i = 0; i < r.samples.size(); ++i) {
        const int clamped = std::clamp(static_cast<int>(r.samples[i]), -tau, tau);
        out.codes[i] = static_cast<std::uint8_t>(clamped + tau);
    }
    return out;
}

}  // namespace colorstat
