#include <colorstat/oneclass.hpp>

#include <colorstat/rng.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace colorstat {

namespace {

double sq_dist(const double* a, const double* b, std::size_t dim) {
    double s = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

}  // namespace

double OneClassModel::decision(const double* x, std::size_t dim) const {
    if (dim != support_vectors.cols) {
        throw DimensionMismatch("OneClassModel::decision: feature dim mismatch");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < support_vectors.rows; ++i) {
        s += alphas[i] * std::exp(-gamma * sq_dist(x, support_vectors.row(i), dim));
    }
    return s - rho;
}

double OneClassModel::decision(const std::vector<double>& x) const {
    return decision(x.data(), x.size());
}

Prediction OneClassModel::predict(const double* x, std::size_t dim) const {
    Prediction p;
    p.score = decision(x, dim);
    p.label = p.score < 0.0 ? Verdict::Outlier : Verdict::Real;
    return p;
}

OneClassModel train_oneclass(const FeatureMatrix& x, double nu, double gamma,
                             double tol, OneClassStats* stats) {
    const std::size_t n = x.rows;
    if (nu <= 0.0 || nu > 1.0) throw InvalidHyperparameter("train_oneclass: nu must be in (0,1]");
    if (gamma <= 0.0) throw InvalidHyperparameter("train_oneclass: gamma must be positive");
    if (n < 2) throw InvalidHyperparameter("train_oneclass: need at least 2 samples");

    const double ub = 1.0 / (nu * static_cast<double>(n));  // box constraint

    // dense kernel matrix; n is a few thousand at most in this pipeline
    std::vector<double> q(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        q[i * n + i] = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double k = std::exp(-gamma * sq_dist(x.row(i), x.row(j), x.cols));
            q[i * n + j] = k;
            q[j * n + i] = k;
        }
    }

    // feasible start: first floor(nu*n) points at the upper bound, remainder on one point
    std::vector<double> alpha(n, 0.0);
    auto n_full = static_cast<std::size_t>(nu * static_cast<double>(n));
    n_full = std::min(n_full, n);
    for (std::size_t i = 0; i < n_full; ++i) alpha[i] = ub;
    if (n_full < n) alpha[n_full] = 1.0 - static_cast<double>(n_full) * ub;

    // gradient of 1/2 a^T Q a is g = Q a
    std::vector<double> g(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double* qi = &q[i * n];
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += qi[j] * alpha[j];
        g[i] = s;
    }

    const double bound_eps = ub * 1e-12;
    const std::size_t max_iter = 100000 + 100 * n;
    std::size_t iter = 0;
    double violation = 0.0;

    for (; iter < max_iter; ++iter) {
        // maximal violating pair: grow the smallest gradient with room to
        // grow, shrink the largest gradient with mass to give
        std::size_t up = n, down = n;
        double g_up = std::numeric_limits<double>::infinity();
        double g_down = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (alpha[i] < ub - bound_eps && g[i] < g_up) {
                g_up = g[i];
                up = i;
            }
            if (alpha[i] > bound_eps && g[i] > g_down) {
                g_down = g[i];
                down = i;
            }
        }
        violation = (up == n || down == n) ? 0.0 : g_down - g_up;
        if (violation < tol) break;

        const double denom = q[up * n + up] + q[down * n + down] - 2.0 * q[up * n + down];
        double step = denom > 1e-15 ? violation / denom
                                    : std::numeric_limits<double>::infinity();
        step = std::min({step, ub - alpha[up], alpha[down]});

        alpha[up] += step;
        alpha[down] -= step;
        const double* qu = &q[up * n];
        const double* qd = &q[down * n];
        for (std::size_t i = 0; i < n; ++i) g[i] += step * (qu[i] - qd[i]);
    }

    // rho: mean gradient over free support vectors, else the midpoint of the
    // KKT bracket [max g at upper bound, min g at zero]
    double free_sum = 0.0;
    std::size_t free_count = 0;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] <= bound_eps) {
            hi = std::min(hi, g[i]);
        } else if (alpha[i] >= ub - bound_eps) {
            lo = std::max(lo, g[i]);
        } else {
            free_sum += g[i];
            ++free_count;
        }
    }
    double rho;
    if (free_count > 0) {
        rho = free_sum / static_cast<double>(free_count);
    } else if (std::isfinite(lo) && std::isfinite(hi)) {
        rho = 0.5 * (lo + hi);
    } else if (std::isfinite(lo)) {
        rho = lo;
    } else {
        rho = hi;
    }

    OneClassModel model;
    model.gamma = gamma;
    model.nu = nu;
    model.rho = rho;

    std::vector<std::size_t> sv;
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] > bound_eps) sv.push_back(i);
    }
    model.support_vectors = FeatureMatrix(sv.size(), x.cols);
    model.alphas.resize(sv.size());
    for (std::size_t s = 0; s < sv.size(); ++s) {
        std::copy_n(x.row(sv[s]), x.cols,
                    model.support_vectors.data.begin() + static_cast<std::ptrdiff_t>(s * x.cols));
        model.alphas[s] = alpha[sv[s]];
    }

    if (stats) {
        stats->iterations = iter;
        stats->max_kkt_violation = violation;
        stats->support_count = sv.size();
        std::size_t outliers = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (g[i] - rho < 0.0) ++outliers;  // g[i] = sum_j a_j K(x_j, x_i)
        }
        stats->train_outlier_fraction = static_cast<double>(outliers) / static_cast<double>(n);
    }
    return model;
}

double grid_search_gamma(const FeatureMatrix& x, double nu,
                         const std::vector<double>& grid, double holdout_fraction,
                         std::uint64_t seed) {
    if (grid.empty()) throw InvalidArgument("grid_search_gamma: empty grid");
    if (grid.size() == 1) return grid.front();
    if (holdout_fraction <= 0.0 || holdout_fraction >= 1.0) {
        throw InvalidArgument("grid_search_gamma: holdout_fraction must be in (0,1)");
    }

    std::vector<std::size_t> idx(x.rows);
    for (std::size_t i = 0; i < x.rows; ++i) idx[i] = i;
    Rng rng(mix_seed(seed, 0x6a77a));
    rng.shuffle(idx);
    const auto n_hold = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(holdout_fraction * static_cast<double>(x.rows))));
    if (n_hold >= x.rows) throw InvalidArgument("grid_search_gamma: holdout leaves no training rows");

    FeatureMatrix xt(x.rows - n_hold, x.cols);
    for (std::size_t i = n_hold; i < x.rows; ++i) {
        std::copy_n(x.row(idx[i]), x.cols,
                    xt.data.begin() + static_cast<std::ptrdiff_t>((i - n_hold) * x.cols));
    }

    const double target = 1.0 - nu;
    double best_gamma = 0.0;
    double best_above = std::numeric_limits<double>::infinity();  // rate - target, rate >= target
    double best_below = -std::numeric_limits<double>::infinity(); // best rate when none reach target

    std::vector<double> sorted_grid = grid;
    std::sort(sorted_grid.begin(), sorted_grid.end());
    for (double gamma : sorted_grid) {
        OneClassModel m = train_oneclass(xt, nu, gamma);
        std::size_t inliers = 0;
        for (std::size_t i = 0; i < n_hold; ++i) {
            if (m.decision(x.row(idx[i]), x.cols) >= 0.0) ++inliers;
        }
        const double rate = static_cast<double>(inliers) / static_cast<double>(n_hold);
        if (rate >= target) {
            if (rate - target < best_above) {  // strict: ties keep the smaller gamma
                best_above = rate - target;
                best_gamma = gamma;
            }
        } else if (!std::isfinite(best_above) && rate > best_below) {
            best_below = rate;
            best_gamma = gamma;
        }
    }
    return best_gamma;
}

std::vector<double> default_gamma_grid(const FeatureMatrix& x, int half_span) {
    if (x.rows < 2) throw InvalidArgument("default_gamma_grid: need at least 2 rows");
    // median squared distance over a capped number of pairs
    std::vector<double> d2;
    const std::size_t cap = std::min<std::size_t>(x.rows, 256);
    for (std::size_t i = 0; i < cap; ++i) {
        for (std::size_t j = i + 1; j < cap; ++j) {
            d2.push_back(sq_dist(x.row(i), x.row(j), x.cols));
        }
    }
    std::nth_element(d2.begin(), d2.begin() + static_cast<std::ptrdiff_t>(d2.size() / 2), d2.end());
    double med = d2[d2.size() / 2];
    if (med <= 0.0) med = 1.0;
    const double center = 1.0 / med;

    std::vector<double> grid;
    for (int e = -half_span; e <= half_span; ++e) {
        grid.push_back(center * std::ldexp(1.0, e));
    }
    return grid;
}

}  // namespace colorstat
