#pragma once

#include <colorstat/classifier.hpp>
#include <colorstat/oneclass.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

namespace colorstat {

/// A trained, serializable model of either kind.
struct TrainedModel {
    std::variant<EnsembleModel, OneClassModel> model;

    bool is_ensemble() const { return std::holds_alternative<EnsembleModel>(model); }
    const EnsembleModel& ensemble() const { return std::get<EnsembleModel>(model); }
    const OneClassModel& oneclass() const { return std::get<OneClassModel>(model); }

    std::size_t feature_dim() const;

    /// Ensemble: majority vote label. One-class: Outlier / Real by the sign
    /// of the decision value.
    Prediction predict(const double* x, std::size_t dim) const;
};

/// Versioned text schema `colorstat-model v1`. Numeric payload is written at
/// 17 significant digits, so load(save(m)) reproduces predictions bit-exactly.
/// Loading failures raise ModelLoadError.
void save_model(std::ostream& out, const TrainedModel& m);
void save_model(const std::string& path, const TrainedModel& m);
TrainedModel load_model(std::istream& in);
TrainedModel load_model(const std::string& path);

}  // namespace colorstat
