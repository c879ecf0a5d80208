#include <colorstat/cooccurrence.hpp>

#include <cmath>

namespace colorstat {

namespace {

std::size_t int_pow(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

CooccurrenceMatrix cooccurrence(const CodePlane& p, int order, Offset off) {
    if (order < 2) throw InvalidArgument("cooccurrence: order must be >= 2");
    if (off.dx < 0 || off.dy < 0 || (off.dx == 0 && off.dy == 0)) {
        throw InvalidArgument("cooccurrence: offset must be non-negative and nonzero");
    }

    const int span_x = (order - 1) * off.dx;
    const int span_y = (order - 1) * off.dy;
    const int xmax = p.width - span_x;
    const int ymax = p.height - span_y;
    if (xmax <= 0 || ymax <= 0) {
        throw PlaneTooSmall("cooccurrence: no chain of the requested order fits");
    }

    const std::size_t L = static_cast<std::size_t>(p.levels);
    CooccurrenceMatrix m;
    m.levels = p.levels;
    m.order = order;
    m.bins.assign(int_pow(L, order), 0.0);

    for (int y = 0; y < ymax; ++y) {
        for (int x = 0; x < xmax; ++x) {
            std::size_t idx = 0;
            for (int k = 0; k < order; ++k) {
                idx = idx * L + p.at(x + k * off.dx, y + k * off.dy);
            }
            m.bins[idx] += 1.0;
        }
    }

    const double n = static_cast<double>(xmax) * static_cast<double>(ymax);
    for (double& b : m.bins) b /= n;
    return m;
}

std::size_t merged_length(int levels, int order) {
    const std::size_t L = static_cast<std::size_t>(levels);
    // palindromes are determined by their first ceil(d/2) digits
    const std::size_t pal = int_pow(L, (order + 1) / 2);
    return (int_pow(L, order) + pal) / 2;
}

std::vector<double> symmetric_merge(const CooccurrenceMatrix& m) {
    const std::size_t L = static_cast<std::size_t>(m.levels);
    const int d = m.order;
    const std::size_t total = m.bins.size();

    std::vector<double> out;
    out.reserve(merged_length(m.levels, d));

    std::vector<std::size_t> digits(static_cast<std::size_t>(d));
    for (std::size_t t = 0; t < total; ++t) {
        std::size_t tt = t;
        for (int k = d - 1; k >= 0; --k) {
            digits[static_cast<std::size_t>(k)] = tt % L;
            tt /= L;
        }
        std::size_t rev = 0;
        for (int k = d - 1; k >= 0; --k) rev = rev * L + digits[static_cast<std::size_t>(k)];

        if (t < rev) {
            out.push_back(m.bins[t] + m.bins[rev]);
        } else if (t == rev) {
            out.push_back(m.bins[t]);
        }
        // t > rev: already emitted at the reversed representative
    }
    return out;
}

}  // namespace colorstat
