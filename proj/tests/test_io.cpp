#include <colorstat/feature_io.hpp>
#include <colorstat/model_io.hpp>

#include <colorstat/rng.hpp>

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace colorstat;

namespace {

FeatureSet sample_feature_set(std::uint64_t seed, std::size_t n, std::size_t dim) {
    Rng rng(seed);
    FeatureSet fs;
    fs.dim = dim;
    for (std::size_t i = 0; i < n; ++i) {
        FeatureRecord rec;
        rec.id = "img_" + std::to_string(i) + ".png";
        rec.label = static_cast<int>(i % 2);
        rec.values.resize(dim);
        for (double& v : rec.values) v = rng.uniform01();
        fs.records.push_back(std::move(rec));
    }
    return fs;
}

}  // namespace

TEST_CASE("feature file round-trips byte for byte") {
    const FeatureSet fs = sample_feature_set(3, 7, 20);

    std::ostringstream first;
    save_features(first, fs);

    std::istringstream in(first.str());
    const FeatureSet loaded = load_features(in);
    CHECK(loaded.dim == fs.dim);
    REQUIRE(loaded.records.size() == fs.records.size());
    for (std::size_t i = 0; i < fs.records.size(); ++i) {
        CHECK(loaded.records[i].id == fs.records[i].id);
        CHECK(loaded.records[i].label == fs.records[i].label);
    }

    std::ostringstream second;
    save_features(second, loaded);
    CHECK(first.str() == second.str());
}

TEST_CASE("feature file rejects malformed input") {
    std::istringstream bad_header("something else\n");
    CHECK_THROWS_AS(load_features(bad_header), FormatError);

    std::istringstream short_row("colorstat-features v1, dim=3\nid,1,0.5,0.5\n");
    CHECK_THROWS_AS(load_features(short_row), FormatError);

    std::istringstream bad_value("colorstat-features v1, dim=2\nid,0,0.5,zzz\n");
    CHECK_THROWS_AS(load_features(bad_value), FormatError);

    FeatureSet fs;
    fs.dim = 1;
    fs.records.push_back({"bad,id", 0, {1.0}});
    std::ostringstream out;
    CHECK_THROWS_AS(save_features(out, fs), FormatError);
}

TEST_CASE("ensemble model round-trips to identical predictions") {
    Rng rng(17);
    EnsembleModel e;
    e.feature_dim = 12;
    e.subspace_dim = 4;
    e.learner_count = 5;
    e.seed = 99;
    for (std::size_t l = 0; l < 5; ++l) {
        FldLearner fl;
        fl.subspace = rng.sample_without_replacement(12, 4);
        fl.weights.resize(4);
        for (double& w : fl.weights) w = rng.normal();
        fl.bias = rng.normal();
        e.learners.push_back(std::move(fl));
    }
    const TrainedModel original{e};

    std::ostringstream out;
    save_model(out, original);
    std::istringstream in(out.str());
    const TrainedModel loaded = load_model(in);

    REQUIRE(loaded.is_ensemble());
    CHECK(loaded.feature_dim() == 12);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> x(12);
        for (double& v : x) v = rng.normal();
        const Prediction a = original.predict(x.data(), x.size());
        const Prediction b = loaded.predict(x.data(), x.size());
        CHECK(a.label == b.label);
        CHECK(a.score == b.score);  // bit-exact
    }
}

TEST_CASE("oneclass model round-trips to identical predictions") {
    Rng rng(31);
    OneClassModel oc;
    oc.nu = 0.1;
    oc.gamma = 0.37;
    oc.rho = 0.8123456789012345;
    oc.support_vectors = FeatureMatrix(6, 8);
    for (double& v : oc.support_vectors.data) v = rng.normal();
    oc.alphas.assign(6, 1.0 / 6.0);
    const TrainedModel original{oc};

    std::ostringstream out;
    save_model(out, original);
    std::istringstream in(out.str());
    const TrainedModel loaded = load_model(in);

    REQUIRE(!loaded.is_ensemble());
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> x(8);
        for (double& v : x) v = rng.normal();
        CHECK(original.predict(x.data(), 8).score == loaded.predict(x.data(), 8).score);
    }
}

TEST_CASE("model loader surfaces corruption") {
    std::istringstream empty("");
    CHECK_THROWS_AS(load_model(empty), ModelLoadError);

    std::istringstream bad_magic("not-a-model\n");
    CHECK_THROWS_AS(load_model(bad_magic), ModelLoadError);

    std::istringstream bad_kind("colorstat-model v1\nkind perceptron\n");
    CHECK_THROWS_AS(load_model(bad_kind), ModelLoadError);

    // truncated ensemble payload
    std::istringstream truncated(
        "colorstat-model v1\nkind ensemble\nfeature_dim 4\nsubspace_dim 2\n"
        "learner_count 2\nseed 1\nlearner 0\nsubspace 0 1\n");
    CHECK_THROWS_AS(load_model(truncated), ModelLoadError);

    // alphas that do not sum to 1
    std::istringstream bad_alpha(
        "colorstat-model v1\nkind oneclass\nfeature_dim 2\nnu 0.1\ngamma 1\nrho 0\n"
        "support_count 2\nsv 0.2 0 0\nsv 0.2 1 1\n");
    CHECK_THROWS_AS(load_model(bad_alpha), ModelLoadError);
}
