// colorstat command-line pipeline:
//   synth      - write seeded synthetic corpora (PNG + manifest)
//   preprocess - center-crop + bilinear resize a corpus
//   extract    - compute feature files from a manifest
//   analyze    - color-component discernibility study
//   train      - fit an ensemble or one-class model from features
//   evaluate   - run a detection scenario end to end
//   detect     - classify images with a trained model
//
// Exit codes: 0 ok, 2 partial data failure, 3 model failure, 64 usage,
// 74 file I/O. Every randomized step takes an explicit --seed.

#include <colorstat/analysis.hpp>
#include <colorstat/colorspace.hpp>
#include <colorstat/dataset.hpp>
#include <colorstat/evaluation.hpp>
#include <colorstat/feature_io.hpp>
#include <colorstat/features.hpp>
#include <colorstat/imagecodec.hpp>
#include <colorstat/model_io.hpp>
#include <colorstat/rng.hpp>
#include <colorstat/synthgen.hpp>

#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using namespace colorstat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartialData = 2;
constexpr int kExitModel = 3;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

// ---------------------------------------------------------------------------
// shared helpers
// ---------------------------------------------------------------------------

template <typename Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn&& fn) {
    workers = std::max<std::size_t>(1, std::min(workers, n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file " + path);
    return out;
}

std::string zero_pad(std::size_t v, int width) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%0*zu", width, v);
    return buf;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stod(tok));
    }
    return out;
}

// ---------------------------------------------------------------------------
// synth
// ---------------------------------------------------------------------------

struct SynthArgs {
    std::string kind;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    int side = 64;
    std::string out_dir;
    std::string manifest_path;
    std::string source_tag;
    std::size_t workers = 1;
    int latent_dim = 16;
    double texture_scale = 8.0;
    double noise_variance = 4.0;
    double coupling = 0.5;
};

int run_synth(const SynthArgs& args) {
    fs::create_directories(args.out_dir);

    const bool dng = args.kind == "dng";
    const std::string tag =
        args.source_tag.empty() ? (dng ? "synth-dng" : "synth-real") : args.source_tag;

    std::optional<DngGenerator> generator;
    ProxySpec proxy;
    if (dng) {
        GenSpec spec;
        spec.seed = args.seed;
        spec.out_side = args.side;
        spec.latent_dim = args.latent_dim;
        generator.emplace(spec);
    } else {
        proxy.seed = args.seed;
        proxy.out_side = args.side;
        proxy.texture_scale = args.texture_scale;
        proxy.noise_variance = args.noise_variance;
        proxy.channel_coupling = args.coupling;
        proxy.validate();
    }

    CorpusManifest manifest;
    manifest.entries.resize(args.count);
    std::atomic<bool> io_failed{false};

    parallel_for(args.count, args.workers, [&](std::size_t i) {
        const RgbImage img = dng ? generator->generate(i) : generate_real_proxy_image(proxy, i);
        const std::string name = args.kind + "_" + zero_pad(i, 6) + ".png";
        const std::string path = (fs::path(args.out_dir) / name).string();
        try {
            save_png(path, img);
        } catch (const Error& e) {
            std::cerr << "colorstat synth: " << e.what() << "\n";
            io_failed = true;
            return;
        }
        manifest.entries[i] = {path, dng ? Label::Dng : Label::Real, tag};
    });
    if (io_failed) throw IoError("synth: failed to write one or more images");

    manifest.finalize();
    save_manifest(args.manifest_path, manifest);
    std::cout << "wrote " << args.count << " " << args.kind << " images to " << args.out_dir
              << " and manifest " << args.manifest_path << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// preprocess
// ---------------------------------------------------------------------------

struct PreprocessArgs {
    std::string manifest_in;
    std::string out_dir;
    std::string manifest_out;
    int crop = 138;
    int size = 64;
    std::size_t workers = 1;
};

int run_preprocess(const PreprocessArgs& args) {
    const CorpusManifest in = load_manifest(args.manifest_in);
    fs::create_directories(args.out_dir);

    const PreprocessSpec spec{args.crop, args.size};
    std::vector<std::optional<ManifestEntry>> results(in.entries.size());
    std::vector<std::string> failures(in.entries.size());
    std::atomic<bool> io_failed{false};

    parallel_for(in.entries.size(), args.workers, [&](std::size_t i) {
        const ManifestEntry& e = in.entries[i];
        try {
            const RgbImage img = load_image(e.path);
            const RgbImage processed = center_crop_resize(img, spec);
            const std::string name =
                zero_pad(i, 6) + "_" + fs::path(e.path).stem().string() + ".png";
            const std::string path = (fs::path(args.out_dir) / name).string();
            save_png(path, processed);
            results[i] = ManifestEntry{path, e.label, e.source};
        } catch (const IoError& err) {
            failures[i] = err.what();
            io_failed = true;
        } catch (const Error& err) {
            failures[i] = err.what();
        }
    });

    CorpusManifest out;
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (results[i]) {
            out.entries.push_back(*results[i]);
        } else {
            std::cerr << "colorstat preprocess: skipping " << in.entries[i].path << ": "
                      << failures[i] << "\n";
            ++skipped;
        }
    }
    if (io_failed) throw IoError("preprocess: output writes failed");

    out.finalize();
    save_manifest(args.manifest_out, out);
    std::cout << "preprocessed " << out.entries.size() << " images (" << skipped
              << " skipped) into " << args.out_dir << "\n";
    return skipped == 0 ? kExitOk : kExitPartialData;
}

// ---------------------------------------------------------------------------
// extract
// ---------------------------------------------------------------------------

struct ExtractArgs {
    std::string manifest_in;
    std::string out_path;
    int tau = 2;
    int order = 3;
    std::size_t workers = 1;
};

int run_extract(const ExtractArgs& args) {
    const CorpusManifest manifest = load_manifest(args.manifest_in);
    ExtractorConfig cfg;
    cfg.tau = args.tau;
    cfg.order = args.order;
    cfg.validate();

    std::vector<std::optional<FeatureRecord>> results(manifest.entries.size());
    std::vector<std::string> failures(manifest.entries.size());

    parallel_for(manifest.entries.size(), args.workers, [&](std::size_t i) {
        const ManifestEntry& e = manifest.entries[i];
        try {
            const FeatureVector fv = extract(load_image(e.path), cfg);
            results[i] = FeatureRecord{e.path, static_cast<int>(e.label), fv.values};
        } catch (const Error& err) {
            failures[i] = err.what();
        }
    });

    FeatureSet fs_out;
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (results[i]) {
            if (fs_out.dim == 0) fs_out.dim = results[i]->values.size();
            fs_out.records.push_back(std::move(*results[i]));
        } else {
            std::cerr << "colorstat extract: skipping " << manifest.entries[i].path << ": "
                      << failures[i] << "\n";
            ++skipped;
        }
    }
    if (fs_out.records.empty()) {
        std::cerr << "colorstat extract: no image produced features\n";
        return kExitPartialData;
    }
    save_features(args.out_path, fs_out);
    std::cout << "extracted " << fs_out.records.size() << " feature rows (dim " << fs_out.dim
              << ", " << skipped << " skipped) to " << args.out_path << "\n";
    return skipped == 0 ? kExitOk : kExitPartialData;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeArgs {
    std::string manifest_in;
    std::uint64_t seed = 0;
    double mean_fraction = 0.5;
    std::size_t si_bins = 50;
    double si_max = 2.5;
    std::string out_path;
    std::string si_hist_out;
};

int run_analyze(const AnalyzeArgs& args) {
    const CorpusManifest manifest = load_manifest(args.manifest_in);
    std::vector<std::string> real_ids, dng_ids;
    for (const ManifestEntry& e : manifest.entries) {
        if (e.label == Label::Real) real_ids.push_back(e.path);
        if (e.label == Label::Dng) dng_ids.push_back(e.path);
    }
    if (real_ids.empty() || dng_ids.empty()) {
        throw InvalidArgument("analyze: manifest must contain both real and dng images");
    }

    StudySpec spec;
    spec.seed = args.seed;
    spec.mean_fraction = args.mean_fraction;
    spec.binning = SiBinning{args.si_bins, args.si_max};

    const StudyReport report = run_discernibility_study(
        real_ids, dng_ids, [](const std::string& id) { return load_image(id); }, spec);

    std::ofstream out = open_output(args.out_path);
    out << "# colorstat-analyze v1\n";
    out << "# manifest " << args.manifest_in << "\n";
    out << "# seed " << args.seed << "\n";
    out << "# mean_fraction " << args.mean_fraction << "\n";
    out << "# si_bins " << args.si_bins << "\n";
    out << "# si_max " << args.si_max << "\n";
    out << "# mean_real " << report.mean_real_count << " mean_dng " << report.mean_dng_count
        << " si_real " << report.si_real_count << " si_dng " << report.si_dng_count << "\n";
    out << "# degenerate_skipped " << report.degenerate_skipped << "\n";
    out << "# codec " << codec_description() << "\n";
    out << "component,d_chi2\n";
    char buf[64];
    for (const ComponentDiscernibility& cd : report.components) {
        std::snprintf(buf, sizeof(buf), "%s,%.6f\n", cd.component.c_str(), cd.d_chi2);
        out << buf;
    }

    if (!args.si_hist_out.empty()) {
        std::ofstream hist = open_output(args.si_hist_out);
        hist << "component,bin,lo,hi,real,dng\n";
        const double width = args.si_max / static_cast<double>(args.si_bins);
        for (const ComponentDiscernibility& cd : report.components) {
            for (std::size_t b = 0; b < cd.si_real.bin_count(); ++b) {
                std::snprintf(buf, sizeof(buf), "%s,%zu,%.4f,%.4f,%.9g,%.9g\n",
                              cd.component.c_str(), b, width * static_cast<double>(b),
                              width * static_cast<double>(b + 1), cd.si_real.bins[b],
                              cd.si_dng.bins[b]);
                hist << buf;
            }
        }
    }

    std::cout << "analyze report written to " << args.out_path << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// train
// ---------------------------------------------------------------------------

struct TrainArgs {
    std::string features_path;
    std::string kind;
    std::string out_path;
    std::uint64_t seed = 0;
    // ensemble
    std::size_t subspace_dim = 96;
    std::size_t learners = 51;
    bool search_dims = false;
    // one-class
    double nu = 0.10;
    double gamma = 0.0;  // 0 = grid search
    std::string gamma_grid_csv;
    double holdout = 0.25;
};

int run_train(const TrainArgs& args) {
    const FeatureSet features = load_features(args.features_path);
    if (features.records.empty()) throw InvalidArgument("train: empty feature file");

    TrainedModel model{EnsembleModel{}};
    if (args.kind == "ensemble") {
        EnsembleConfig cfg;
        cfg.subspace_dim = args.subspace_dim;
        cfg.learner_count = args.learners;
        cfg.seed = args.seed;
        const FeatureMatrix x = features.matrix();
        const std::vector<int> y = features.labels();
        if (args.search_dims) {
            cfg.subspace_dim = search_subspace_dim(x, y, cfg, {32, 64, 96, 128, 192});
            std::cout << "subspace_dim search selected " << cfg.subspace_dim << "\n";
        }
        model = TrainedModel{train_ensemble(x, y, cfg)};
    } else if (args.kind == "oneclass") {
        FeatureSet reals;
        reals.dim = features.dim;
        for (const FeatureRecord& rec : features.records) {
            if (rec.label == 0) reals.records.push_back(rec);
        }
        if (reals.records.empty()) {
            throw InvalidArgument("train: one-class training needs real-labeled rows");
        }
        if (reals.records.size() != features.records.size()) {
            std::cerr << "colorstat train: ignoring "
                      << features.records.size() - reals.records.size()
                      << " non-real rows for one-class training\n";
        }
        const FeatureMatrix x = reals.matrix();
        double gamma = args.gamma;
        if (gamma <= 0.0) {
            const std::vector<double> grid = args.gamma_grid_csv.empty()
                                                 ? default_gamma_grid(x)
                                                 : parse_double_list(args.gamma_grid_csv);
            gamma = grid_search_gamma(x, args.nu, grid, args.holdout, args.seed);
            std::cout << "gamma grid search selected " << gamma << "\n";
        }
        OneClassStats stats;
        model = TrainedModel{train_oneclass(x, args.nu, gamma, 1e-4, &stats)};
        std::cout << "one-class training: " << stats.support_count << " support vectors, "
                  << "train outlier fraction " << stats.train_outlier_fraction << "\n";
    } else {
        throw InvalidArgument("train: unknown kind '" + args.kind + "'");
    }

    save_model(args.out_path, model);
    std::cout << "model written to " << args.out_path << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// evaluate
// ---------------------------------------------------------------------------

struct EvaluateArgs {
    std::string scenario;
    std::string features_a;
    std::string features_b;
    double train_fraction = 0.25;
    std::size_t repetitions = 10;
    std::uint64_t seed = 0;
    std::size_t subspace_dim = 96;
    std::size_t learners = 51;
    bool search_dims = false;
    double nu = 0.10;
    std::string gamma_grid_csv;
    double holdout = 0.25;
    std::string out_path;
    std::string csv_path;
};

int run_evaluate(const EvaluateArgs& args) {
    ScenarioConfig cfg;
    cfg.kind = scenario_from_string(args.scenario);
    cfg.corpus_a = load_features(args.features_a);
    cfg.corpus_a_name = fs::path(args.features_a).filename().string();
    if (cfg.kind == ScenarioKind::ModelAware) {
        if (args.features_b.empty()) {
            throw InvalidArgument("evaluate: model_aware needs --features-b");
        }
        cfg.corpus_b = load_features(args.features_b);
        cfg.corpus_b_name = fs::path(args.features_b).filename().string();
        if (cfg.corpus_b.dim != cfg.corpus_a.dim) {
            throw InvalidArgument("evaluate: feature dimensions differ between corpora");
        }
    }
    cfg.split.train_fraction = args.train_fraction;
    cfg.split.repetitions = args.repetitions;
    cfg.split.seed = args.seed;
    cfg.classifier.ensemble.subspace_dim = args.subspace_dim;
    cfg.classifier.ensemble.learner_count = args.learners;
    cfg.classifier.ensemble.seed = args.seed;
    if (args.search_dims) cfg.classifier.subspace_search = {{32, 64, 96, 128, 192}};
    cfg.classifier.nu = args.nu;
    if (!args.gamma_grid_csv.empty()) cfg.classifier.gamma_grid = parse_double_list(args.gamma_grid_csv);
    cfg.classifier.holdout_fraction = args.holdout;

    const EvalReport report = run_scenario(cfg);

    std::ofstream out = open_output(args.out_path);
    write_report(out, report);
    if (!args.csv_path.empty()) {
        std::ofstream csv = open_output(args.csv_path);
        write_report_csv(csv, report, true);
    }

    char buf[128];
    std::snprintf(buf, sizeof(buf), "mean FPR %.2f%%  FNR %.2f%%  ACC %.2f%% (%zu repetitions)\n",
                  100.0 * report.mean_fpr, 100.0 * report.mean_fnr, 100.0 * report.mean_acc,
                  report.repetitions.size());
    std::cout << report.detector << " on " << report.testing_set << ": " << buf;
    std::cout << "report written to " << args.out_path << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// detect
// ---------------------------------------------------------------------------

struct DetectArgs {
    std::string model_path;
    std::vector<std::string> images;
    std::string format = "v1";
    int tau = 2;
    int order = 3;
};

int run_detect(const DetectArgs& args) {
    TrainedModel model{EnsembleModel{}};
    try {
        model = load_model(args.model_path);
    } catch (const Error& e) {
        std::cerr << "colorstat detect: " << e.what() << "\n";
        return kExitModel;
    }

    ExtractorConfig cfg;
    cfg.tau = args.tau;
    cfg.order = args.order;
    cfg.validate();

    std::size_t failed = 0;
    for (const std::string& path : args.images) {
        try {
            const FeatureVector fv = extract(load_image(path), cfg);
            if (fv.dim() != model.feature_dim()) {
                throw DimensionMismatch("feature dimension " + std::to_string(fv.dim()) +
                                        " does not match model dimension " +
                                        std::to_string(model.feature_dim()));
            }
            const Prediction p = model.predict(fv.values.data(), fv.dim());
            const char* label = (p.label == Verdict::Real) ? "real" : "dng";
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.6f", p.score);
            std::cout << path << " " << label << " " << buf << "\n";
        } catch (const Error& e) {
            std::cerr << "colorstat detect: skipping " << path << ": " << e.what() << "\n";
            ++failed;
        }
    }
    return failed == 0 ? kExitOk : kExitPartialData;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"color-statistics detector for deep-network-generated images"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "colorstat 1.0.0");
    app.set_config("--config", "", "INI config file overriding flag defaults");

    // --- synth ---
    SynthArgs synth;
    CLI::App* synth_cmd = app.add_subcommand("synth", "generate a seeded synthetic corpus");
    synth_cmd->add_option("--kind", synth.kind, "corpus kind")
        ->required()
        ->check(CLI::IsMember({"dng", "real"}));
    synth_cmd->add_option("--count", synth.count, "number of images")->required()
        ->check(CLI::PositiveNumber);
    synth_cmd->add_option("--seed", synth.seed, "generator seed")->required();
    synth_cmd->add_option("--side", synth.side, "image side in pixels")
        ->capture_default_str();
    synth_cmd->add_option("--out-dir", synth.out_dir, "output directory")->required();
    synth_cmd->add_option("--manifest", synth.manifest_path, "manifest to write")->required();
    synth_cmd->add_option("--source-tag", synth.source_tag, "manifest source tag");
    synth_cmd->add_option("--workers", synth.workers, "worker threads")->capture_default_str();
    synth_cmd->add_option("--latent-dim", synth.latent_dim, "dng latent dimension")
        ->capture_default_str();
    synth_cmd->add_option("--texture-scale", synth.texture_scale, "real-proxy texture scale")
        ->capture_default_str();
    synth_cmd->add_option("--noise-variance", synth.noise_variance, "real-proxy sensor noise")
        ->capture_default_str();
    synth_cmd->add_option("--coupling", synth.coupling, "real-proxy channel coupling")
        ->capture_default_str();

    // --- preprocess ---
    PreprocessArgs prep;
    CLI::App* prep_cmd = app.add_subcommand("preprocess", "center-crop and resize a corpus");
    prep_cmd->add_option("--manifest", prep.manifest_in, "input manifest")->required();
    prep_cmd->add_option("--out-dir", prep.out_dir, "output directory")->required();
    prep_cmd->add_option("--out-manifest", prep.manifest_out, "manifest to write")->required();
    prep_cmd->add_option("--crop", prep.crop, "center crop side")->capture_default_str();
    prep_cmd->add_option("--size", prep.size, "output side")
        ->capture_default_str()
        ->check(CLI::Range(4, 1 << 14));
    prep_cmd->add_option("--workers", prep.workers, "worker threads")->capture_default_str();

    // --- extract ---
    ExtractArgs extr;
    CLI::App* extract_cmd = app.add_subcommand("extract", "extract features for a manifest");
    extract_cmd->add_option("--manifest", extr.manifest_in, "input manifest")->required();
    extract_cmd->add_option("--out", extr.out_path, "feature file to write")->required();
    extract_cmd->add_option("--tau", extr.tau, "chrominance truncation threshold")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    extract_cmd->add_option("--order", extr.order, "co-occurrence order")
        ->capture_default_str()
        ->check(CLI::Range(2, 6));
    extract_cmd->add_option("--workers", extr.workers, "worker threads")->capture_default_str();

    // --- analyze ---
    AnalyzeArgs ana;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "color-component discernibility study");
    analyze_cmd->add_option("--manifest", ana.manifest_in, "labeled manifest")->required();
    analyze_cmd->add_option("--seed", ana.seed, "shuffle seed")->required();
    analyze_cmd->add_option("--mean-fraction", ana.mean_fraction, "share used for mean histograms")
        ->capture_default_str()
        ->check(CLI::Range(0.01, 0.99));
    analyze_cmd->add_option("--si-bins", ana.si_bins, "similarity-index histogram bins")
        ->capture_default_str();
    analyze_cmd->add_option("--si-max", ana.si_max, "similarity-index histogram upper edge")
        ->capture_default_str();
    analyze_cmd->add_option("--out", ana.out_path, "report file to write")->required();
    analyze_cmd->add_option("--si-hist-out", ana.si_hist_out, "optional SI histogram dump");

    // --- train ---
    TrainArgs train;
    CLI::App* train_cmd = app.add_subcommand("train", "fit a model from a feature file");
    train_cmd->add_option("--features", train.features_path, "feature file")->required();
    train_cmd->add_option("--kind", train.kind, "model kind")
        ->required()
        ->check(CLI::IsMember({"ensemble", "oneclass"}));
    train_cmd->add_option("--out", train.out_path, "model file to write")->required();
    train_cmd->add_option("--seed", train.seed, "training seed")->required();
    train_cmd->add_option("--subspace-dim", train.subspace_dim, "ensemble subspace dimension")
        ->capture_default_str();
    train_cmd->add_option("--learners", train.learners, "ensemble size (odd)")
        ->capture_default_str();
    train_cmd->add_flag("--search-subspace-dim", train.search_dims,
                        "search subspace_dim over {32,64,96,128,192}");
    train_cmd->add_option("--nu", train.nu, "one-class training outlier bound")
        ->capture_default_str()
        ->check(CLI::Range(1e-6, 1.0));
    train_cmd->add_option("--gamma", train.gamma, "fixed one-class kernel width (skip search)");
    train_cmd->add_option("--gamma-grid", train.gamma_grid_csv, "comma-separated gamma grid");
    train_cmd->add_option("--holdout", train.holdout, "gamma-search holdout fraction")
        ->capture_default_str()
        ->check(CLI::Range(0.01, 0.99));

    // --- evaluate ---
    EvaluateArgs ev;
    CLI::App* eval_cmd = app.add_subcommand("evaluate", "run a detection scenario");
    eval_cmd->add_option("--scenario", ev.scenario, "scenario kind")
        ->required()
        ->check(CLI::IsMember({"sample_aware", "model_aware", "model_unaware"}));
    eval_cmd->add_option("--features", ev.features_a, "corpus A feature file")->required();
    eval_cmd->add_option("--features-b", ev.features_b, "corpus B feature file (model_aware)");
    eval_cmd->add_option("--train-fraction", ev.train_fraction, "train split fraction")
        ->capture_default_str()
        ->check(CLI::Range(0.01, 0.99));
    eval_cmd->add_option("--repetitions", ev.repetitions, "number of repetitions")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    eval_cmd->add_option("--seed", ev.seed, "split / training seed")->required();
    eval_cmd->add_option("--subspace-dim", ev.subspace_dim, "ensemble subspace dimension")
        ->capture_default_str();
    eval_cmd->add_option("--learners", ev.learners, "ensemble size (odd)")->capture_default_str();
    eval_cmd->add_flag("--search-subspace-dim", ev.search_dims,
                       "search subspace_dim over {32,64,96,128,192}");
    eval_cmd->add_option("--nu", ev.nu, "one-class training outlier bound")->capture_default_str();
    eval_cmd->add_option("--gamma-grid", ev.gamma_grid_csv, "comma-separated gamma grid");
    eval_cmd->add_option("--holdout", ev.holdout, "gamma-search holdout fraction")
        ->capture_default_str();
    eval_cmd->add_option("--out", ev.out_path, "report file to write")->required();
    eval_cmd->add_option("--csv", ev.csv_path, "optional one-row summary csv");

    // --- detect ---
    DetectArgs det;
    CLI::App* detect_cmd = app.add_subcommand("detect", "classify images with a trained model");
    detect_cmd->add_option("--model", det.model_path, "model file")->required();
    detect_cmd->add_option("images", det.images, "image paths")->required()->expected(-1);
    detect_cmd->add_option("--format", det.format, "output format version")
        ->capture_default_str()
        ->check(CLI::IsMember({"v1"}));
    detect_cmd->add_option("--tau", det.tau, "extractor truncation threshold")
        ->capture_default_str();
    detect_cmd->add_option("--order", det.order, "extractor co-occurrence order")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*synth_cmd) return run_synth(synth);
        if (*prep_cmd) return run_preprocess(prep);
        if (*extract_cmd) return run_extract(extr);
        if (*analyze_cmd) return run_analyze(ana);
        if (*train_cmd) return run_train(train);
        if (*eval_cmd) return run_evaluate(ev);
        if (*detect_cmd) return run_detect(det);
    } catch (const InvalidArgument& e) {
        std::cerr << "colorstat: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "colorstat: " << e.what() << "\n";
        return kExitIo;
    } catch (const FormatError& e) {
        std::cerr << "colorstat: " << e.what() << "\n";
        return kExitIo;
    } catch (const ModelLoadError& e) {
        std::cerr << "colorstat: " << e.what() << "\n";
        return kExitModel;
    } catch (const SingleClassInput& e) {
        std::cerr << "colorstat: " << e.what() << "\n";
        return kExitModel;
    } catch (const InvalidHyperparameter& e) {
        std::cerr << "colorstat: " << e.what() << "\n";
        return kExitModel;
    } catch (const Error& e) {
        std::cerr << "colorstat: " << e.what() << "\n";
        return kExitPartialData;
    }
    return kExitUsage;
}
