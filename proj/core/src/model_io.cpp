#include <colorstat/model_io.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace colorstat {

std::size_t TrainedModel::feature_dim() const {
    if (is_ensemble()) return ensemble().feature_dim;
    return oneclass().support_vectors.cols;
}

Prediction TrainedModel::predict(const double* x, std::size_t dim) const {
    if (is_ensemble()) return predict_ensemble(ensemble(), x, dim);
    return oneclass().predict(x, dim);
}

namespace {

constexpr const char* kMagic = "colorstat-model v1";

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

[[noreturn]] void fail(const std::string& what) {
    throw ModelLoadError("load_model: " + what);
}

std::istringstream line_stream(std::istream& in, const char* expected_key) {
    std::string line;
    if (!std::getline(in, line)) fail(std::string("unexpected end of file, wanted ") + expected_key);
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key != expected_key) fail("expected '" + std::string(expected_key) + "', got '" + key + "'");
    return ls;
}

template <typename T>
T read_scalar(std::istream& in, const char* key) {
    auto ls = line_stream(in, key);
    T v{};
    if (!(ls >> v)) fail(std::string("bad value for ") + key);
    return v;
}

}  // namespace

void save_model(std::ostream& out, const TrainedModel& m) {
    out << kMagic << "\n";
    if (m.is_ensemble()) {
        const EnsembleModel& e = m.ensemble();
        out << "kind ensemble\n";
        out << "feature_dim " << e.feature_dim << "\n";
        out << "subspace_dim " << e.subspace_dim << "\n";
        out << "learner_count " << e.learner_count << "\n";
        out << "seed " << e.seed << "\n";
        for (std::size_t l = 0; l < e.learners.size(); ++l) {
            const FldLearner& fl = e.learners[l];
            out << "learner " << l << "\n";
            out << "subspace";
            for (std::size_t idx : fl.subspace) out << ' ' << idx;
            out << "\nweights";
            for (double w : fl.weights) out << ' ' << g17(w);
            out << "\nbias " << g17(fl.bias) << "\n";
        }
    } else {
        const OneClassModel& oc = m.oneclass();
        out << "kind oneclass\n";
        out << "feature_dim " << oc.support_vectors.cols << "\n";
        out << "nu " << g17(oc.nu) << "\n";
        out << "gamma " << g17(oc.gamma) << "\n";
        out << "rho " << g17(oc.rho) << "\n";
        out << "support_count " << oc.support_vectors.rows << "\n";
        for (std::size_t i = 0; i < oc.support_vectors.rows; ++i) {
            out << "sv " << g17(oc.alphas[i]);
            const double* row = oc.support_vectors.row(i);
            for (std::size_t k = 0; k < oc.support_vectors.cols; ++k) out << ' ' << g17(row[k]);
            out << "\n";
        }
    }
    if (!out) throw IoError("save_model: write failed");
}

void save_model(const std::string& path, const TrainedModel& m) {
    std::ofstream out(path);
    if (!out) throw IoError("save_model: cannot open " + path);
    save_model(out, m);
}

TrainedModel load_model(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header != kMagic) {
        fail("bad magic line");
    }
    auto kind_ls = line_stream(in, "kind");
    std::string kind;
    kind_ls >> kind;

    if (kind == "ensemble") {
        EnsembleModel e;
        e.feature_dim = read_scalar<std::size_t>(in, "feature_dim");
        e.subspace_dim = read_scalar<std::size_t>(in, "subspace_dim");
        e.learner_count = read_scalar<std::size_t>(in, "learner_count");
        e.seed = read_scalar<std::uint64_t>(in, "seed");
        e.learners.reserve(e.learner_count);
        for (std::size_t l = 0; l < e.learner_count; ++l) {
            auto hl = line_stream(in, "learner");
            std::size_t index = 0;
            hl >> index;
            if (index != l) fail("learner index out of order");

            FldLearner fl;
            auto sl = line_stream(in, "subspace");
            std::size_t idx;
            while (sl >> idx) {
                if (idx >= e.feature_dim) fail("subspace index out of range");
                fl.subspace.push_back(idx);
            }
            if (fl.subspace.size() != e.subspace_dim) fail("subspace size mismatch");

            auto wl = line_stream(in, "weights");
            double w;
            while (wl >> w) fl.weights.push_back(w);
            if (fl.weights.size() != e.subspace_dim) fail("weight count mismatch");

            fl.bias = read_scalar<double>(in, "bias");
            if (!std::isfinite(fl.bias)) fail("non-finite bias");
            e.learners.push_back(std::move(fl));
        }
        return TrainedModel{std::move(e)};
    }

    if (kind == "oneclass") {
        OneClassModel oc;
        const auto dim = read_scalar<std::size_t>(in, "feature_dim");
        oc.nu = read_scalar<double>(in, "nu");
        oc.gamma = read_scalar<double>(in, "gamma");
        oc.rho = read_scalar<double>(in, "rho");
        const auto count = read_scalar<std::size_t>(in, "support_count");
        if (oc.nu <= 0.0 || oc.nu > 1.0 || oc.gamma <= 0.0) fail("bad hyperparameters");

        oc.support_vectors = FeatureMatrix(count, dim);
        oc.alphas.resize(count);
        double alpha_sum = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            auto ls = line_stream(in, "sv");
            if (!(ls >> oc.alphas[i])) fail("bad alpha");
            alpha_sum += oc.alphas[i];
            for (std::size_t k = 0; k < dim; ++k) {
                if (!(ls >> oc.support_vectors.at(i, k))) fail("short support vector row");
            }
        }
        if (count > 0 && std::abs(alpha_sum - 1.0) > 1e-9) fail("alphas do not sum to 1");
        return TrainedModel{std::move(oc)};
    }

    fail("unknown model kind '" + kind + "'");
}

TrainedModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelLoadError("load_model: cannot open " + path);
    return load_model(in);
}

}  // namespace colorstat
