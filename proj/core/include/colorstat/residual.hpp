#pragma once

#include <colorstat/image.hpp>

namespace colorstat {

/// The two first-order difference filters. Vertical is the column filter
/// [1; -1], Horizontal the row filter [1 -1].
enum class FilterKind { Vertical, Horizontal };

inline const char* to_string(FilterKind f) {
    return f == FilterKind::Vertical ? "vertical" : "horizontal";
}

/// Valid-region high-pass filtering, no padding.
/// Horizontal: out(x,y) = p(x,y) - p(x+1,y), output width = width-1.
/// Vertical:   out(x,y) = p(x,y) - p(x,y+1), output height = height-1.
/// Throws DimensionTooSmall if the filtered axis has length < 2.
ResidualPlane highpass(const ImagePlane& plane, FilterKind f);

/// code = 1 where residual > 0, else 0 (zero maps to 0).
CodePlane binarize(const ResidualPlane& r);

/// code(x,y) = r + 2g + 4b, levels 8. Throws DimensionMismatch unless all
/// three planes are binary and share dimensions.
CodePlane assemble_rgb(const CodePlane& rb, const CodePlane& gb, const CodePlane& bb);

/// Clamp residuals to [-tau, tau], then shift by +tau so codes lie in
/// [0, 2*tau]. The shift is an internal relabeling; co-occurrence counting
/// only needs distinct levels.
CodePlane truncate(const ResidualPlane& r, int tau);

}  // namespace colorstat
