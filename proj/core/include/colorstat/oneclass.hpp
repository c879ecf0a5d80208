#pragma once

#include <colorstat/classifier.hpp>

#include <vector>

namespace colorstat {

/// Gaussian-kernel one-class model (nu formulation).
/// decision(x) = sum_i alpha_i * exp(-gamma * ||x - sv_i||^2) - rho;
/// decision < 0 marks x an outlier. Invariants: sum alpha = 1 and
/// 0 <= alpha_i <= 1/(nu * n) for the n training points.
struct OneClassModel {
    FeatureMatrix support_vectors;  // only rows with alpha > 0 are kept
    std::vector<double> alphas;
    double rho = 0.0;
    double gamma = 0.0;
    double nu = 0.0;

    double decision(const double* x, std::size_t dim) const;
    double decision(const std::vector<double>& x) const;
    Prediction predict(const double* x, std::size_t dim) const;
};

struct OneClassStats {
    std::size_t iterations = 0;
    double max_kkt_violation = 0.0;  // at termination
    std::size_t support_count = 0;
    double train_outlier_fraction = 0.0;
};

/// Solves the nu one-class dual
///   min 1/2 a^T Q a   s.t. 0 <= a_i <= 1/(nu*n), sum a = 1,
/// with Q_ij = exp(-gamma ||x_i - x_j||^2), by maximal-violating-pair
/// coordinate updates until the KKT gap falls below tol. rho comes from the
/// margin support vectors. Throws InvalidHyperparameter for nu outside
/// (0, 1], gamma <= 0, or n < 2.
OneClassModel train_oneclass(const FeatureMatrix& x_real, double nu, double gamma,
                             double tol = 1e-4, OneClassStats* stats = nullptr);

/// Grid search: trains on (1 - holdout_fraction) of the rows and scores each
/// gamma by its held-out inlier rate. Picks the gamma whose rate is closest
/// to (1 - nu) from above; if no rate reaches it, the highest rate wins.
/// Ties go to the smaller gamma.
double grid_search_gamma(const FeatureMatrix& x_real, double nu,
                         const std::vector<double>& grid, double holdout_fraction,
                         std::uint64_t seed);

/// Powers-of-two grid centered on the median-pairwise-distance heuristic,
/// the default when no explicit grid is configured.
std::vector<double> default_gamma_grid(const FeatureMatrix& x_real, int half_span = 6);

}  // namespace colorstat
