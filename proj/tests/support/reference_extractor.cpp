#include "reference_extractor.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace colorstat::reference {

namespace {

using Grid = std::vector<std::vector<int>>;  // [y][x]

Grid plane_to_grid(const ImagePlane& p) {
    Grid g(static_cast<std::size_t>(p.height), std::vector<int>(static_cast<std::size_t>(p.width)));
    for (int y = 0; y < p.height; ++y) {
        for (int x = 0; x < p.width; ++x) {
            g[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = p.at(x, y);
        }
    }
    return g;
}

// horizontal difference: out(x,y) = in(x,y) - in(x+1,y)
Grid diff_horizontal(const Grid& in) {
    const std::size_t h = in.size(), w = in[0].size();
    Grid out(h, std::vector<int>(w - 1));
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x + 1 < w; ++x) {
            out[y][x] = in[y][x] - in[y][x + 1];
        }
    }
    return out;
}

// vertical difference: out(x,y) = in(x,y) - in(x,y+1)
Grid diff_vertical(const Grid& in) {
    const std::size_t h = in.size(), w = in[0].size();
    Grid out(h - 1, std::vector<int>(w));
    for (std::size_t y = 0; y + 1 < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            out[y][x] = in[y][x] - in[y + 1][x];
        }
    }
    return out;
}

Grid binarize_grid(const Grid& in) {
    Grid out = in;
    for (auto& row : out) {
        for (int& v : row) v = v > 0 ? 1 : 0;
    }
    return out;
}

Grid assemble_grid(const Grid& r, const Grid& g, const Grid& b) {
    Grid out = r;
    for (std::size_t y = 0; y < out.size(); ++y) {
        for (std::size_t x = 0; x < out[0].size(); ++x) {
            out[y][x] = r[y][x] + 2 * g[y][x] + 4 * b[y][x];
        }
    }
    return out;
}

Grid truncate_grid(const Grid& in, int tau) {
    Grid out = in;
    for (auto& row : out) {
        for (int& v : row) {
            if (v >= tau) {
                v = tau;
            } else if (v <= -tau) {
                v = -tau;
            }
            v += tau;
        }
    }
    return out;
}

// Literal indicator-sum transcription: one pass over all positions per bin.
std::vector<double> cooc_indicator(const Grid& plane, int levels, int order, int dx, int dy) {
    const int h = static_cast<int>(plane.size());
    const int w = static_cast<int>(plane[0].size());
    const int xmax = w - (order - 1) * dx;
    const int ymax = h - (order - 1) * dy;

    std::size_t total_bins = 1;
    for (int i = 0; i < order; ++i) total_bins *= static_cast<std::size_t>(levels);

    std::vector<double> c(total_bins, 0.0);
    std::vector<int> tuple(static_cast<std::size_t>(order));
    for (std::size_t bin = 0; bin < total_bins; ++bin) {
        std::size_t t = bin;
        for (int k = order - 1; k >= 0; --k) {
            tuple[static_cast<std::size_t>(k)] = static_cast<int>(t % static_cast<std::size_t>(levels));
            t /= static_cast<std::size_t>(levels);
        }
        double count = 0.0;
        for (int y = 0; y < ymax; ++y) {
            for (int x = 0; x < xmax; ++x) {
                bool match = true;
                for (int k = 0; k < order; ++k) {
                    if (plane[static_cast<std::size_t>(y + k * dy)][static_cast<std::size_t>(x + k * dx)] !=
                        tuple[static_cast<std::size_t>(k)]) {
                        match = false;
                        break;
                    }
                }
                if (match) count += 1.0;
            }
        }
        c[bin] = count / (static_cast<double>(xmax) * static_cast<double>(ymax));
    }
    return c;
}

std::vector<double> merge_reversals(const std::vector<double>& c, int levels, int order) {
    std::vector<double> out;
    std::vector<int> tuple(static_cast<std::size_t>(order));
    for (std::size_t bin = 0; bin < c.size(); ++bin) {
        std::size_t t = bin;
        for (int k = order - 1; k >= 0; --k) {
            tuple[static_cast<std::size_t>(k)] = static_cast<int>(t % static_cast<std::size_t>(levels));
            t /= static_cast<std::size_t>(levels);
        }
        std::size_t rev = 0;
        for (int k = order - 1; k >= 0; --k) {
            rev = rev * static_cast<std::size_t>(levels) + static_cast<std::size_t>(tuple[static_cast<std::size_t>(k)]);
        }
        if (bin < rev) {
            out.push_back(c[bin] + c[rev]);
        } else if (bin == rev) {
            out.push_back(c[bin]);
        }
    }
    return out;
}

// mean of the four matrices (2 filters x 2 offsets), then merge
std::vector<double> group_features(const Grid& plane_v, const Grid& plane_h, int levels, int order) {
    std::vector<double> acc;
    int n = 0;
    for (const Grid* plane : {&plane_v, &plane_h}) {
        for (const auto [dx, dy] : {std::pair{0, 1}, std::pair{1, 0}}) {
            std::vector<double> c = cooc_indicator(*plane, levels, order, dx, dy);
            if (acc.empty()) acc.assign(c.size(), 0.0);
            for (std::size_t i = 0; i < c.size(); ++i) acc[i] += c[i];
            ++n;
        }
    }
    for (double& v : acc) v /= n;
    return merge_reversals(acc, levels, order);
}

}  // namespace

namespace {

// nearest-integer p/q via quotient + remainder (p >= 0, q > 0); ties round up
int round_div(long long p, long long q) {
    const long long quo = p / q;
    const long long rem = p % q;
    return static_cast<int>(quo + (2 * rem >= q ? 1 : 0));
}

}  // namespace

void hsv_pixel(int r, int g, int b, int& h, int& s, int& v) {
    const int maxc = std::max(r, std::max(g, b));
    const int minc = std::min(r, std::min(g, b));
    const int d = maxc - minc;

    h = 0;
    if (d > 0) {
        long long sixth;  // angle as a fraction with denominator 6*d
        if (maxc == r) {
            sixth = g - b;
            if (sixth < 0) sixth += 6LL * d;
        } else if (maxc == g) {
            sixth = (b - r) + 2LL * d;
        } else {
            sixth = (r - g) + 4LL * d;
        }
        h = round_div(255LL * sixth, 6LL * d);
    }
    s = maxc > 0 ? round_div(255LL * d, maxc) : 0;
    v = maxc;
}

void ycbcr_pixel(int r, int g, int b, int& y, int& cb, int& cr) {
    // coefficients are exact in units of 10^-6
    y = round_div(299000LL * r + 587000LL * g + 114000LL * b, 1000000);
    cb = round_div(128000000LL - 168736LL * r - 331264LL * g + 500000LL * b, 1000000);
    cr = round_div(128000000LL + 500000LL * r - 418688LL * g - 81312LL * b, 1000000);
    y = std::min(255, std::max(0, y));
    cb = std::min(255, std::max(0, cb));
    cr = std::min(255, std::max(0, cr));
}

std::vector<double> extract(const RgbImage& img, int tau, int order) {
    const int w = img.width(), h = img.height();

    const Grid r = plane_to_grid(img.r);
    const Grid g = plane_to_grid(img.g);
    const Grid b = plane_to_grid(img.b);

    Grid hp(static_cast<std::size_t>(h), std::vector<int>(static_cast<std::size_t>(w)));
    Grid sp = hp, cbp = hp, crp = hp;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            int hh, ss, vv, yy, cb, cr;
            hsv_pixel(r[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)],
                      g[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)],
                      b[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)], hh, ss, vv);
            ycbcr_pixel(r[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)],
                        g[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)],
                        b[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)], yy, cb, cr);
            hp[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = hh;
            sp[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = ss;
            cbp[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = cb;
            crp[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = cr;
        }
    }

    std::vector<double> features;

    // assembled RGB branch
    const Grid rgb_v = assemble_grid(binarize_grid(diff_vertical(r)), binarize_grid(diff_vertical(g)),
                                     binarize_grid(diff_vertical(b)));
    const Grid rgb_h = assemble_grid(binarize_grid(diff_horizontal(r)),
                                     binarize_grid(diff_horizontal(g)),
                                     binarize_grid(diff_horizontal(b)));
    std::vector<double> seg = group_features(rgb_v, rgb_h, 8, order);
    features.insert(features.end(), seg.begin(), seg.end());

    // chrominance branches
    for (const Grid* plane : {&hp, &sp, &cbp, &crp}) {
        const Grid tv = truncate_grid(diff_vertical(*plane), tau);
        const Grid th = truncate_grid(diff_horizontal(*plane), tau);
        seg = group_features(tv, th, 2 * tau + 1, order);
        features.insert(features.end(), seg.begin(), seg.end());
    }
    return features;
}

}  // namespace colorstat::reference
