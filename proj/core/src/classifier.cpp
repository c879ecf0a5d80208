#include <colorstat/classifier.hpp>

#include <colorstat/rng.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace colorstat {

FldLearner train_fld(const FeatureMatrix& x, const std::vector<int>& y,
                     const std::vector<std::size_t>& subspace) {
    if (subspace.empty()) throw InvalidArgument("train_fld: empty subspace");
    if (x.rows != y.size()) throw DimensionMismatch("train_fld: rows != labels");
    for (std::size_t j : subspace) {
        if (j >= x.cols) throw InvalidArgument("train_fld: subspace index out of range");
    }

    const auto dim = static_cast<Eigen::Index>(subspace.size());
    Eigen::VectorXd mu0 = Eigen::VectorXd::Zero(dim);
    Eigen::VectorXd mu1 = Eigen::VectorXd::Zero(dim);
    std::size_t n0 = 0, n1 = 0;

    for (std::size_t i = 0; i < x.rows; ++i) {
        Eigen::VectorXd& mu = (y[i] == 1) ? mu1 : mu0;
        for (Eigen::Index k = 0; k < dim; ++k) {
            mu(k) += x.at(i, subspace[static_cast<std::size_t>(k)]);
        }
        (y[i] == 1 ? n1 : n0) += 1;
    }
    if (n0 == 0 || n1 == 0) throw SingleClassInput("train_fld: both classes required");
    mu0 /= static_cast<double>(n0);
    mu1 /= static_cast<double>(n1);

    // pooled within-class scatter
    Eigen::MatrixXd sw = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::VectorXd xi(dim);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (Eigen::Index k = 0; k < dim; ++k) {
            xi(k) = x.at(i, subspace[static_cast<std::size_t>(k)]);
        }
        xi -= (y[i] == 1) ? mu1 : mu0;
        sw.selfadjointView<Eigen::Lower>().rankUpdate(xi, 1.0);
    }
    sw = sw.selfadjointView<Eigen::Lower>();

    const double ridge = 1e-6 * sw.trace() / static_cast<double>(dim);
    sw.diagonal().array() += ridge;

    Eigen::VectorXd w = sw.ldlt().solve(mu1 - mu0);
    if (!w.allFinite()) throw Error("train_fld: non-finite discriminant");

    FldLearner learner;
    learner.subspace = subspace;
    learner.weights.assign(w.data(), w.data() + dim);
    learner.bias = -0.5 * w.dot(mu0 + mu1);
    return learner;
}

EnsembleModel train_ensemble(const FeatureMatrix& x, const std::vector<int>& y,
                             const EnsembleConfig& cfg) {
    if (cfg.learner_count < 1 || cfg.learner_count % 2 == 0) {
        throw InvalidHyperparameter("train_ensemble: learner_count must be odd and >= 1");
    }
    if (cfg.subspace_dim == 0 || cfg.subspace_dim > x.cols) {
        throw InvalidHyperparameter("train_ensemble: subspace_dim must be in [1, feature_dim]");
    }

    // subspaces are pre-drawn so learner training order cannot affect them
    Rng rng(cfg.seed);
    std::vector<std::vector<std::size_t>> subspaces;
    subspaces.reserve(cfg.learner_count);
    for (std::size_t l = 0; l < cfg.learner_count; ++l) {
        subspaces.push_back(rng.sample_without_replacement(x.cols, cfg.subspace_dim));
    }

    EnsembleModel model;
    model.subspace_dim = cfg.subspace_dim;
    model.learner_count = cfg.learner_count;
    model.seed = cfg.seed;
    model.feature_dim = x.cols;
    model.learners.reserve(cfg.learner_count);
    for (const auto& sub : subspaces) {
        model.learners.push_back(train_fld(x, y, sub));
    }
    return model;
}

Prediction predict_ensemble(const EnsembleModel& m, const double* x, std::size_t dim) {
    if (dim != m.feature_dim) throw DimensionMismatch("predict_ensemble: feature dim mismatch");
    std::size_t dng_votes = 0;
    for (const FldLearner& l : m.learners) {
        if (l.score(x) > 0.0) ++dng_votes;
    }
    Prediction p;
    p.score = static_cast<double>(dng_votes) / static_cast<double>(m.learners.size());
    p.label = (2 * dng_votes > m.learners.size()) ? Verdict::Dng : Verdict::Real;
    return p;
}

Prediction predict_ensemble(const EnsembleModel& m, const std::vector<double>& x) {
    return predict_ensemble(m, x.data(), x.size());
}

std::size_t search_subspace_dim(const FeatureMatrix& x, const std::vector<int>& y,
                                const EnsembleConfig& cfg,
                                const std::vector<std::size_t>& candidates,
                                double holdout_fraction) {
    if (candidates.empty()) throw InvalidArgument("search_subspace_dim: empty candidate list");
    if (holdout_fraction <= 0.0 || holdout_fraction >= 1.0) {
        throw InvalidArgument("search_subspace_dim: holdout_fraction must be in (0,1)");
    }

    // per-class stratified holdout
    std::vector<std::size_t> train_idx, val_idx;
    for (int cls = 0; cls <= 1; ++cls) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < x.rows; ++i) {
            if (y[i] == cls) idx.push_back(i);
        }
        Rng rng(mix_seed(cfg.seed, 0x5ea4c4 + static_cast<std::uint64_t>(cls)));
        rng.shuffle(idx);
        const auto n_val = static_cast<std::size_t>(
            std::ceil(holdout_fraction * static_cast<double>(idx.size())));
        for (std::size_t i = 0; i < idx.size(); ++i) {
            (i < n_val ? val_idx : train_idx).push_back(idx[i]);
        }
    }

    FeatureMatrix xt(train_idx.size(), x.cols);
    std::vector<int> yt(train_idx.size());
    for (std::size_t i = 0; i < train_idx.size(); ++i) {
        std::copy_n(x.row(train_idx[i]), x.cols, xt.data.begin() + static_cast<std::ptrdiff_t>(i * x.cols));
        yt[i] = y[train_idx[i]];
    }

    std::size_t best_dim = 0;
    double best_acc = -1.0;
    for (std::size_t cand : candidates) {
        if (cand > x.cols) continue;
        EnsembleConfig c = cfg;
        c.subspace_dim = cand;
        EnsembleModel m = train_ensemble(xt, yt, c);
        std::size_t correct = 0;
        for (std::size_t i : val_idx) {
            const Prediction p = predict_ensemble(m, x.row(i), x.cols);
            if ((p.label == Verdict::Dng) == (y[i] == 1)) ++correct;
        }
        const double acc = static_cast<double>(correct) / static_cast<double>(val_idx.size());
        if (acc > best_acc || (acc == best_acc && cand < best_dim)) {
            best_acc = acc;
            best_dim = cand;
        }
    }
    if (best_dim == 0) throw InvalidArgument("search_subspace_dim: no feasible candidate");
    return best_dim;
}

}  // namespace colorstat
