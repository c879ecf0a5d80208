#pragma once

#include <colorstat/classifier.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace colorstat {

/// One extracted image: identifier, label (0 real, 1 dng, -1 unknown) and
/// the feature values.
struct FeatureRecord {
    std::string id;
    int label = -1;
    std::vector<double> values;
};

/// In-memory feature corpus with a fixed dimension.
struct FeatureSet {
    std::size_t dim = 0;
    std::vector<FeatureRecord> records;

    /// Rows in record order.
    FeatureMatrix matrix() const;
    std::vector<int> labels() const;
};

/// Text format `colorstat-features v1`:
///   colorstat-features v1, dim=<d>
///   <id>,<label>,<v1>,...,<vd>
/// Values are written with 9 significant digits; parsing and re-serializing
/// a file reproduces it byte for byte. Ids must not contain the delimiter.
void save_features(std::ostream& out, const FeatureSet& fs);
void save_features(const std::string& path, const FeatureSet& fs);
FeatureSet load_features(std::istream& in);
FeatureSet load_features(const std::string& path);

std::string format_value_9sig(double v);

}  // namespace colorstat
