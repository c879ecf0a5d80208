#include <colorstat/evaluation.hpp>

#include <colorstat/rng.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace colorstat {

const char* to_string(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::SampleAware: return "sample_aware";
        case ScenarioKind::ModelAware: return "model_aware";
        case ScenarioKind::ModelUnaware: return "model_unaware";
    }
    return "?";
}

ScenarioKind scenario_from_string(const std::string& s) {
    if (s == "sample_aware") return ScenarioKind::SampleAware;
    if (s == "model_aware") return ScenarioKind::ModelAware;
    if (s == "model_unaware") return ScenarioKind::ModelUnaware;
    throw InvalidArgument("unknown scenario '" + s + "'");
}

ConfusionCounts confusion(const std::vector<Verdict>& preds, const std::vector<Label>& truths) {
    if (preds.size() != truths.size() || preds.empty()) {
        throw InvalidArgument("confusion: prediction/truth lists must be nonempty and equal-length");
    }
    ConfusionCounts c;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        const bool pred_dng = preds[i] != Verdict::Real;  // Outlier counts as DNG
        switch (truths[i]) {
            case Label::Dng:
                (pred_dng ? c.tp : c.fn) += 1;
                break;
            case Label::Real:
                (pred_dng ? c.fp : c.tn) += 1;
                break;
            case Label::Unknown:
                throw InvalidArgument("confusion: unlabeled truth entry");
        }
    }
    const std::size_t n_real = c.tn + c.fp;
    const std::size_t n_dng = c.tp + c.fn;
    if (n_real == 0 || n_dng == 0) {
        throw MissingClass("confusion: both classes must be present in truths");
    }
    c.fpr = static_cast<double>(c.fp) / static_cast<double>(n_real);
    c.fnr = static_cast<double>(c.fn) / static_cast<double>(n_dng);
    c.acc = static_cast<double>(c.tp + c.tn) / static_cast<double>(preds.size());
    return c;
}

namespace {

FeatureSet subset(const FeatureSet& fs, const std::vector<std::size_t>& idx) {
    FeatureSet out;
    out.dim = fs.dim;
    out.records.reserve(idx.size());
    for (std::size_t i : idx) out.records.push_back(fs.records[i]);
    return out;
}

std::vector<Label> set_labels(const FeatureSet& fs) {
    std::vector<Label> labels(fs.records.size());
    for (std::size_t i = 0; i < fs.records.size(); ++i) {
        labels[i] = static_cast<Label>(fs.records[i].label);
    }
    return labels;
}

ConfusionCounts eval_ensemble(const EnsembleModel& model, const FeatureSet& test) {
    std::vector<Verdict> preds;
    std::vector<Label> truths;
    preds.reserve(test.records.size());
    for (const FeatureRecord& rec : test.records) {
        preds.push_back(predict_ensemble(model, rec.values).label);
        truths.push_back(static_cast<Label>(rec.label));
    }
    return confusion(preds, truths);
}

EnsembleModel fit_ensemble(const FeatureSet& train, const ClassifierOptions& opts,
                           std::uint64_t rep_seed) {
    EnsembleConfig cfg = opts.ensemble;
    cfg.seed = rep_seed;
    const FeatureMatrix x = train.matrix();
    const std::vector<int> y = train.labels();
    if (opts.subspace_search && !opts.subspace_search->empty()) {
        cfg.subspace_dim = search_subspace_dim(x, y, cfg, *opts.subspace_search);
    }
    return train_ensemble(x, y, cfg);
}

struct RealDngViews {
    std::vector<std::size_t> real_idx;
    std::vector<std::size_t> dng_idx;
};

RealDngViews class_views(const FeatureSet& fs) {
    RealDngViews v;
    for (std::size_t i = 0; i < fs.records.size(); ++i) {
        if (fs.records[i].label == 1) {
            v.dng_idx.push_back(i);
        } else if (fs.records[i].label == 0) {
            v.real_idx.push_back(i);
        } else {
            throw InvalidArgument("run_scenario: unlabeled feature record " + fs.records[i].id);
        }
    }
    return v;
}

}  // namespace

EvalReport run_scenario(const ScenarioConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    if (cfg.split.repetitions < 1) throw InvalidArgument("run_scenario: repetitions must be >= 1");

    EvalReport report;
    report.kind = cfg.kind;

    switch (cfg.kind) {
        case ScenarioKind::SampleAware: {
            const std::vector<Label> labels = set_labels(cfg.corpus_a);
            for (std::size_t rep = 0; rep < cfg.split.repetitions; ++rep) {
                const SplitIndices si = stratified_split(labels, cfg.split, rep);
                const FeatureSet train = subset(cfg.corpus_a, si.train);
                const FeatureSet test = subset(cfg.corpus_a, si.test);
                const EnsembleModel model =
                    fit_ensemble(train, cfg.classifier, mix_seed(cfg.classifier.ensemble.seed, rep));
                report.repetitions.push_back(eval_ensemble(model, test));
            }
            report.testing_set = cfg.corpus_a_name + " (held-out)";
            break;
        }
        case ScenarioKind::ModelAware: {
            for (std::size_t rep = 0; rep < cfg.split.repetitions; ++rep) {
                const EnsembleModel model = fit_ensemble(
                    cfg.corpus_a, cfg.classifier, mix_seed(cfg.classifier.ensemble.seed, rep));
                report.repetitions.push_back(eval_ensemble(model, cfg.corpus_b));
            }
            report.testing_set = cfg.corpus_b_name;
            break;
        }
        case ScenarioKind::ModelUnaware: {
            const RealDngViews views = class_views(cfg.corpus_a);
            if (views.real_idx.empty()) {
                throw MissingClass("run_scenario: model-unaware needs real training rows");
            }
            std::vector<Label> real_labels(views.real_idx.size(), Label::Real);
            for (std::size_t rep = 0; rep < cfg.split.repetitions; ++rep) {
                const SplitIndices si = stratified_split(real_labels, cfg.split, rep);

                std::vector<std::size_t> train_rows, test_rows;
                for (std::size_t i : si.train) train_rows.push_back(views.real_idx[i]);
                for (std::size_t i : si.test) test_rows.push_back(views.real_idx[i]);
                test_rows.insert(test_rows.end(), views.dng_idx.begin(), views.dng_idx.end());

                const FeatureSet train = subset(cfg.corpus_a, train_rows);
                const FeatureMatrix xt = train.matrix();
                const std::vector<double> grid = cfg.classifier.gamma_grid.empty()
                                                     ? default_gamma_grid(xt)
                                                     : cfg.classifier.gamma_grid;
                const double gamma =
                    grid_search_gamma(xt, cfg.classifier.nu, grid, cfg.classifier.holdout_fraction,
                                      mix_seed(cfg.split.seed, rep));
                const OneClassModel model = train_oneclass(xt, cfg.classifier.nu, gamma);

                std::vector<Verdict> preds;
                std::vector<Label> truths;
                for (std::size_t row : test_rows) {
                    const Prediction p =
                        model.predict(cfg.corpus_a.records[row].values.data(), cfg.corpus_a.dim);
                    preds.push_back(p.label == Verdict::Outlier ? Verdict::Dng : Verdict::Real);
                    truths.push_back(static_cast<Label>(cfg.corpus_a.records[row].label));
                }
                report.repetitions.push_back(confusion(preds, truths));
            }
            report.testing_set = cfg.corpus_a_name + " (held-out real + dng)";
            break;
        }
    }

    // unweighted means over repetitions, sample standard deviation
    const auto n = static_cast<double>(report.repetitions.size());
    for (const ConfusionCounts& c : report.repetitions) {
        report.mean_fpr += c.fpr;
        report.mean_fnr += c.fnr;
        report.mean_acc += c.acc;
    }
    report.mean_fpr /= n;
    report.mean_fnr /= n;
    report.mean_acc /= n;
    if (report.repetitions.size() > 1) {
        double vf = 0.0, vn = 0.0, va = 0.0;
        for (const ConfusionCounts& c : report.repetitions) {
            vf += (c.fpr - report.mean_fpr) * (c.fpr - report.mean_fpr);
            vn += (c.fnr - report.mean_fnr) * (c.fnr - report.mean_fnr);
            va += (c.acc - report.mean_acc) * (c.acc - report.mean_acc);
        }
        report.std_fpr = std::sqrt(vf / (n - 1.0));
        report.std_fnr = std::sqrt(vn / (n - 1.0));
        report.std_acc = std::sqrt(va / (n - 1.0));
    }

    std::ostringstream detector;
    if (cfg.kind == ScenarioKind::ModelUnaware) {
        detector << "oneclass(nu=" << cfg.classifier.nu << ")";
    } else {
        detector << "ensemble(subspace=" << cfg.classifier.ensemble.subspace_dim
                 << ",learners=" << cfg.classifier.ensemble.learner_count << ")";
    }
    report.detector = detector.str();

    std::ostringstream echo;
    echo << "scenario " << to_string(cfg.kind) << "\n"
         << "corpus_a " << cfg.corpus_a_name << " (" << cfg.corpus_a.records.size() << " records)\n";
    if (cfg.kind == ScenarioKind::ModelAware) {
        echo << "corpus_b " << cfg.corpus_b_name << " (" << cfg.corpus_b.records.size()
             << " records)\n";
    }
    echo << "train_fraction " << cfg.split.train_fraction << "\n"
         << "repetitions " << cfg.split.repetitions << "\n"
         << "seed " << cfg.split.seed << "\n";
    if (cfg.kind == ScenarioKind::ModelUnaware) {
        echo << "nu " << cfg.classifier.nu << "\n"
             << "gamma_grid "
             << (cfg.classifier.gamma_grid.empty() ? "auto" : std::to_string(cfg.classifier.gamma_grid.size()) + " values")
             << "\n"
             << "holdout_fraction " << cfg.classifier.holdout_fraction << "\n";
    } else {
        echo << "subspace_dim " << cfg.classifier.ensemble.subspace_dim << "\n"
             << "learner_count " << cfg.classifier.ensemble.learner_count << "\n"
             << "ensemble_seed " << cfg.classifier.ensemble.seed << "\n";
    }
    report.config_echo = echo.str();

    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

void write_report(std::ostream& out, const EvalReport& r) {
    out << "colorstat-eval v1\n" << r.config_echo;
    out << "rep,fpr,fnr,acc,tp,tn,fp,fn\n";
    char buf[160];
    for (std::size_t i = 0; i < r.repetitions.size(); ++i) {
        const ConfusionCounts& c = r.repetitions[i];
        std::snprintf(buf, sizeof(buf), "%zu,%.6f,%.6f,%.6f,%zu,%zu,%zu,%zu\n", i, c.fpr, c.fnr,
                      c.acc, c.tp, c.tn, c.fp, c.fn);
        out << buf;
    }
    std::snprintf(buf, sizeof(buf), "mean,%.6f,%.6f,%.6f\n", r.mean_fpr, r.mean_fnr, r.mean_acc);
    out << buf;
    std::snprintf(buf, sizeof(buf), "std,%.6f,%.6f,%.6f\n", r.std_fpr, r.std_fnr, r.std_acc);
    out << buf;
    std::snprintf(buf, sizeof(buf), "seconds %.3f\n", r.seconds);
    out << buf;
}

void write_report_csv(std::ostream& out, const EvalReport& r, bool header) {
    if (header) out << "detector,testing_set,fpr_pct,fnr_pct,acc_pct\n";
    char buf[64];
    out << r.detector << ',' << r.testing_set;
    std::snprintf(buf, sizeof(buf), ",%.2f,%.2f,%.2f\n", 100.0 * r.mean_fpr, 100.0 * r.mean_fnr,
                  100.0 * r.mean_acc);
    out << buf;
}

}  // namespace colorstat
