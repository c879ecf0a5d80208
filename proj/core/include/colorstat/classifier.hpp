#pragma once

#include <colorstat/errors.hpp>

#include <cstdint>
#include <vector>

namespace colorstat {

/// Row-major feature matrix: rows are samples.
struct FeatureMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    FeatureMatrix() = default;
    FeatureMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const double* row(std::size_t r) const { return data.data() + r * cols; }
};

enum class Verdict { Real = 0, Dng = 1, Outlier = 2 };

struct Prediction {
    Verdict label = Verdict::Real;
    double score = 0.0;  // vote fraction (ensemble) or decision value (one-class)
};

/// One Fisher linear discriminant on a fixed feature subspace.
/// Decision score for x: sum_k weights[k] * x[subspace[k]] + bias, with
/// score > 0 voting DNG.
struct FldLearner {
    std::vector<std::size_t> subspace;  // sorted, unique, within [0, feature_dim)
    std::vector<double> weights;
    double bias = 0.0;

    double score(const double* x) const {
        double s = bias;
        for (std::size_t k = 0; k < subspace.size(); ++k) s += weights[k] * x[subspace[k]];
        return s;
    }
};

struct EnsembleConfig {
    std::size_t subspace_dim = 96;
    std::size_t learner_count = 51;  // odd, so majority votes are tie-free
    std::uint64_t seed = 0;
};

struct EnsembleModel {
    std::vector<FldLearner> learners;
    std::size_t subspace_dim = 0;
    std::size_t learner_count = 0;
    std::uint64_t seed = 0;
    std::size_t feature_dim = 0;
};

/// Fisher discriminant on the given subspace columns:
/// w = (S_W + eps*I)^-1 (mu1 - mu0) with ridge eps = 1e-6 * trace(S_W)/dim,
/// bias placed at the midpoint of the projected class means.
/// Labels: 0 = real, 1 = dng. Throws SingleClassInput unless both appear.
FldLearner train_fld(const FeatureMatrix& x, const std::vector<int>& y,
                     const std::vector<std::size_t>& subspace);

/// learner_count subspaces drawn without replacement from a generator seeded
/// by cfg.seed, one FLD per subspace. Deterministic given the seed.
EnsembleModel train_ensemble(const FeatureMatrix& x, const std::vector<int>& y,
                             const EnsembleConfig& cfg);

/// Majority vote; score is the DNG-vote fraction.
Prediction predict_ensemble(const EnsembleModel& m, const double* x, std::size_t dim);
Prediction predict_ensemble(const EnsembleModel& m, const std::vector<double>& x);

/// Validation search over candidate subspace dimensions: splits (x, y) with
/// holdout_fraction per class, trains one ensemble per candidate, returns the
/// dimension with the best holdout accuracy (ties to the smaller dimension).
std::size_t search_subspace_dim(const FeatureMatrix& x, const std::vector<int>& y,
                                const EnsembleConfig& cfg,
                                const std::vector<std::size_t>& candidates,
                                double holdout_fraction = 0.2);

}  // namespace colorstat
