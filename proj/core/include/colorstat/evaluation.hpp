#pragma once

#include <colorstat/classifier.hpp>
#include <colorstat/dataset.hpp>
#include <colorstat/feature_io.hpp>
#include <colorstat/oneclass.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace colorstat {

enum class ScenarioKind { SampleAware, ModelAware, ModelUnaware };

const char* to_string(ScenarioKind k);
ScenarioKind scenario_from_string(const std::string& s);

/// Classifier settings shared by the evaluation harness and the train
/// subcommand.
struct ClassifierOptions {
    EnsembleConfig ensemble;
    std::optional<std::vector<std::size_t>> subspace_search;  // engages search_subspace_dim
    double nu = 0.10;
    std::vector<double> gamma_grid;  // empty selects default_gamma_grid
    double holdout_fraction = 0.25;  // gamma-search holdout
};

struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::SampleAware;
    FeatureSet corpus_a;              // training corpus (and test corpus except model-aware)
    FeatureSet corpus_b;              // model-aware test corpus
    std::string corpus_a_name = "A";
    std::string corpus_b_name = "B";
    SplitSpec split;
    ClassifierOptions classifier;
};

struct ConfusionCounts {
    std::size_t tp = 0, tn = 0, fp = 0, fn = 0;
    double fpr = 0.0, fnr = 0.0, acc = 0.0;
};

/// DNG is the positive class: FPR = FP / n_real, FNR = FN / n_dng,
/// ACC = (TP + TN) / total. Outlier verdicts count as DNG. Throws
/// MissingClass unless both labels appear in truths.
ConfusionCounts confusion(const std::vector<Verdict>& preds, const std::vector<Label>& truths);

struct EvalReport {
    ScenarioKind kind = ScenarioKind::SampleAware;
    std::vector<ConfusionCounts> repetitions;
    double mean_fpr = 0.0, mean_fnr = 0.0, mean_acc = 0.0;
    double std_fpr = 0.0, std_fnr = 0.0, std_acc = 0.0;
    std::string detector;     // e.g. "ensemble(subspace=96,learners=51)"
    std::string testing_set;  // corpus name(s)
    std::string config_echo;  // effective parameters, one per line
    double seconds = 0.0;
};

/// Runs one detection scenario over extracted features.
///  - sample-aware: stratified split of corpus A per repetition; binary
///    ensemble on the train part, metrics on the held-out part.
///  - model-aware: ensemble trained on all of corpus A (fresh subspace seed
///    per repetition), metrics on all of corpus B.
///  - model-unaware: per repetition the real rows of corpus A are split;
///    a one-class model is fit on the training reals (gamma by grid search)
///    and evaluated on held-out reals plus every DNG row, outliers mapped
///    to DNG.
EvalReport run_scenario(const ScenarioConfig& cfg);

/// Structured-text report (config echo, per-repetition rows, mean +- std).
void write_report(std::ostream& out, const EvalReport& r);

/// One delimiter-separated row: detector, testing set, FPR%, FNR%, ACC%.
void write_report_csv(std::ostream& out, const EvalReport& r, bool header);

}  // namespace colorstat
