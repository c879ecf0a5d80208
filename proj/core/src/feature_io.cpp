#include <colorstat/feature_io.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace colorstat {

FeatureMatrix FeatureSet::matrix() const {
    FeatureMatrix m(records.size(), dim);
    for (std::size_t i = 0; i < records.size(); ++i) {
        std::copy(records[i].values.begin(), records[i].values.end(),
                  m.data.begin() + static_cast<std::ptrdiff_t>(i * dim));
    }
    return m;
}

std::vector<int> FeatureSet::labels() const {
    std::vector<int> y(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) y[i] = records[i].label;
    return y;
}

std::string format_value_9sig(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void save_features(std::ostream& out, const FeatureSet& fs) {
    out << "colorstat-features v1, dim=" << fs.dim << "\n";
    for (const FeatureRecord& rec : fs.records) {
        if (rec.id.find(',') != std::string::npos || rec.id.find('\n') != std::string::npos) {
            throw FormatError("save_features: id contains the delimiter: " + rec.id);
        }
        if (rec.values.size() != fs.dim) {
            throw DimensionMismatch("save_features: record dimension mismatch for " + rec.id);
        }
        out << rec.id << ',' << rec.label;
        for (double v : rec.values) out << ',' << format_value_9sig(v);
        out << '\n';
    }
    if (!out) throw IoError("save_features: write failed");
}

void save_features(const std::string& path, const FeatureSet& fs) {
    std::ofstream out(path);
    if (!out) throw IoError("save_features: cannot open " + path);
    save_features(out, fs);
}

FeatureSet load_features(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw FormatError("load_features: empty input");

    std::size_t dim = 0;
    {
        static constexpr const char* magic = "colorstat-features v1, dim=";
        if (header.rfind(magic, 0) != 0) {
            throw FormatError("load_features: bad header: " + header);
        }
        try {
            dim = std::stoul(header.substr(std::string(magic).size()));
        } catch (const std::exception&) {
            throw FormatError("load_features: bad dimension in header");
        }
    }

    FeatureSet fs;
    fs.dim = dim;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        FeatureRecord rec;
        std::size_t pos = line.find(',');
        if (pos == std::string::npos) {
            throw FormatError("load_features: malformed line " + std::to_string(line_no));
        }
        rec.id = line.substr(0, pos);

        const char* p = line.c_str() + pos + 1;
        char* end = nullptr;
        rec.label = static_cast<int>(std::strtol(p, &end, 10));
        if (end == p || *end != ',') {
            throw FormatError("load_features: bad label on line " + std::to_string(line_no));
        }
        p = end + 1;

        rec.values.reserve(dim);
        while (true) {
            const double v = std::strtod(p, &end);
            if (end == p) {
                throw FormatError("load_features: bad value on line " + std::to_string(line_no));
            }
            rec.values.push_back(v);
            p = end;
            if (*p == ',') {
                ++p;
            } else {
                break;
            }
        }
        if (*p != '\0') {
            throw FormatError("load_features: trailing garbage on line " + std::to_string(line_no));
        }
        if (rec.values.size() != dim) {
            throw FormatError("load_features: wrong value count on line " + std::to_string(line_no));
        }
        fs.records.push_back(std::move(rec));
    }
    return fs;
}

FeatureSet load_features(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("load_features: cannot open " + path);
    return load_features(in);
}

}  // namespace colorstat
