#include <colorstat/dataset.hpp>

#include <colorstat/rng.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace colorstat {

const char* to_string(Label l) {
    switch (l) {
        case Label::Real: return "real";
        case Label::Dng: return "dng";
        case Label::Unknown: return "unknown";
    }
    return "?";
}

Label label_from_string(const std::string& s) {
    if (s == "real" || s == "0") return Label::Real;
    if (s == "dng" || s == "1") return Label::Dng;
    if (s == "unknown" || s == "-1") return Label::Unknown;
    throw FormatError("unknown label '" + s + "'");
}

void CorpusManifest::finalize() {
    std::sort(entries.begin(), entries.end(),
              [](const ManifestEntry& a, const ManifestEntry& b) { return a.path < b.path; });
    const auto dup = std::adjacent_find(
        entries.begin(), entries.end(),
        [](const ManifestEntry& a, const ManifestEntry& b) { return a.path == b.path; });
    if (dup != entries.end()) {
        throw FormatError("manifest: duplicate path " + dup->path);
    }
}

std::size_t CorpusManifest::count(Label l) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(),
                      [l](const ManifestEntry& e) { return e.label == l; }));
}

void save_manifest(const std::string& path, const CorpusManifest& m) {
    std::ofstream out(path);
    if (!out) throw IoError("save_manifest: cannot open " + path);
    for (const ManifestEntry& e : m.entries) {
        if (e.path.find('\t') != std::string::npos || e.path.find('\n') != std::string::npos) {
            throw FormatError("save_manifest: path contains the delimiter: " + e.path);
        }
        out << e.path << '\t' << to_string(e.label) << '\t' << e.source << '\n';
    }
    if (!out) throw IoError("save_manifest: write failed for " + path);
}

CorpusManifest load_manifest(std::istream& in) {
    CorpusManifest m;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        ManifestEntry e;
        std::string label;
        if (!std::getline(ls, e.path, '\t') || !std::getline(ls, label, '\t')) {
            throw FormatError("manifest: malformed line " + std::to_string(line_no));
        }
        std::getline(ls, e.source, '\t');  // source tag may be empty
        e.label = label_from_string(label);
        m.entries.push_back(std::move(e));
    }
    m.finalize();
    return m;
}

CorpusManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("load_manifest: cannot open " + path);
    return load_manifest(in);
}

// ---------------------------------------------------------------------------
// Preprocessing
// ---------------------------------------------------------------------------

namespace {

std::uint8_t bilinear_sample(const ImagePlane& p, double sx, double sy) {
    const int x0 = static_cast<int>(std::floor(sx));
    const int y0 = static_cast<int>(std::floor(sy));
    const int x1 = std::min(x0 + 1, p.width - 1);
    const int y1 = std::min(y0 + 1, p.height - 1);
    const double fx = sx - x0;
    const double fy = sy - y0;

    const double v = (p.at(x0, y0) * (1.0 - fx) + p.at(x1, y0) * fx) * (1.0 - fy) +
                     (p.at(x0, y1) * (1.0 - fx) + p.at(x1, y1) * fx) * fy;
    const long r = std::lround(v);
    return static_cast<std::uint8_t>(std::clamp(r, 0L, 255L));
}

ImagePlane crop_resize_plane(const ImagePlane& p, int ox, int oy, int crop, int out) {
    ImagePlane cropped(crop, crop);
    for (int y = 0; y < crop; ++y) {
        for (int x = 0; x < crop; ++x) {
            cropped.at(x, y) = p.at(ox + x, oy + y);
        }
    }
    if (out == crop) return cropped;

    ImagePlane resized(out, out);
    const double scale = static_cast<double>(crop) / static_cast<double>(out);
    for (int y = 0; y < out; ++y) {
        // half-pixel-center mapping, clamped at the borders
        const double sy = std::clamp((y + 0.5) * scale - 0.5, 0.0, static_cast<double>(crop - 1));
        for (int x = 0; x < out; ++x) {
            const double sx =
                std::clamp((x + 0.5) * scale - 0.5, 0.0, static_cast<double>(crop - 1));
            resized.at(x, y) = bilinear_sample(cropped, sx, sy);
        }
    }
    return resized;
}

}  // namespace

RgbImage center_crop_resize(const RgbImage& img, const PreprocessSpec& spec) {
    img.validate();
    if (spec.out_side < 1) throw InvalidArgument("center_crop_resize: out_side must be >= 1");
    if (spec.crop_side < 1) throw InvalidArgument("center_crop_resize: crop_side must be >= 1");
    if (spec.crop_side > img.width() || spec.crop_side > img.height()) {
        throw CropTooLarge("center_crop_resize: crop side exceeds source dimensions");
    }
    const int ox = (img.width() - spec.crop_side) / 2;
    const int oy = (img.height() - spec.crop_side) / 2;
    return RgbImage(crop_resize_plane(img.r, ox, oy, spec.crop_side, spec.out_side),
                    crop_resize_plane(img.g, ox, oy, spec.crop_side, spec.out_side),
                    crop_resize_plane(img.b, ox, oy, spec.crop_side, spec.out_side));
}

// ---------------------------------------------------------------------------
// Splitting
// ---------------------------------------------------------------------------

SplitIndices stratified_split(const std::vector<Label>& labels, const SplitSpec& spec,
                              std::size_t repetition_index) {
    if (spec.train_fraction <= 0.0 || spec.train_fraction >= 1.0) {
        throw InvalidArgument("stratified_split: train_fraction must be in (0,1)");
    }
    if (spec.repetitions < 1 || repetition_index >= spec.repetitions) {
        throw InvalidArgument("stratified_split: repetition index out of range");
    }

    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == Label::Unknown) {
            throw InvalidArgument("stratified_split: unlabeled entry at index " + std::to_string(i));
        }
    }

    SplitIndices out;
    for (Label cls : {Label::Real, Label::Dng}) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == cls) idx.push_back(i);
        }
        if (idx.empty()) continue;  // single-class corpora split trivially

        Rng rng(mix_seed(spec.seed, repetition_index, static_cast<std::uint64_t>(cls)));
        rng.shuffle(idx);
        const auto n_train = static_cast<std::size_t>(
            std::ceil(spec.train_fraction * static_cast<double>(idx.size())));
        for (std::size_t i = 0; i < idx.size(); ++i) {
            (i < n_train ? out.train : out.test).push_back(idx[i]);
        }
    }
    std::sort(out.train.begin(), out.train.end());
    std::sort(out.test.begin(), out.test.end());
    return out;
}

std::pair<CorpusManifest, CorpusManifest> split(const CorpusManifest& m, const SplitSpec& spec,
                                                std::size_t repetition_index) {
    std::vector<Label> labels(m.entries.size());
    for (std::size_t i = 0; i < m.entries.size(); ++i) labels[i] = m.entries[i].label;

    const SplitIndices idx = stratified_split(labels, spec, repetition_index);
    CorpusManifest train, test;
    for (std::size_t i : idx.train) train.entries.push_back(m.entries[i]);
    for (std::size_t i : idx.test) test.entries.push_back(m.entries[i]);
    return {std::move(train), std::move(test)};
}

}  // namespace colorstat
