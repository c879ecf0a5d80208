#pragma once

#include <colorstat/image.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace colorstat {

enum class Label : int { Real = 0, Dng = 1, Unknown = -1 };

const char* to_string(Label l);
Label label_from_string(const std::string& s);

struct ManifestEntry {
    std::string path;
    Label label = Label::Unknown;
    std::string source;  // free-form corpus tag
};

/// Image corpus listing. Entries are kept sorted lexicographically by path
/// (seed-independent ordering) and paths are unique.
struct CorpusManifest {
    std::vector<ManifestEntry> entries;

    /// Sorts by path and rejects duplicates.
    void finalize();
    std::size_t count(Label l) const;
};

/// Tab-separated, one record per line: path, label, source-tag.
void save_manifest(const std::string& path, const CorpusManifest& m);
CorpusManifest load_manifest(const std::string& path);
CorpusManifest load_manifest(std::istream& in);

// ---------------------------------------------------------------------------
// Preprocessing
// ---------------------------------------------------------------------------

struct PreprocessSpec {
    int crop_side = 138;
    int out_side = 64;
};

/// Center crop of crop_side^2 (origin floor((w - crop)/2, (h - crop)/2)),
/// then bilinear resize to out_side^2 using half-pixel-center sampling.
/// crop_side == out_side is an exact identity on the cropped block.
/// Throws CropTooLarge when the crop does not fit. Any positive out_side is
/// accepted here; the preprocess CLI enforces the >= 4 pipeline minimum.
RgbImage center_crop_resize(const RgbImage& img, const PreprocessSpec& spec);

// ---------------------------------------------------------------------------
// Train/test splitting
// ---------------------------------------------------------------------------

struct SplitSpec {
    double train_fraction = 0.25;
    std::size_t repetitions = 10;
    std::uint64_t seed = 0;
};

struct SplitIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

/// Per-class stratified split of arbitrary labeled rows. Each class list is
/// shuffled by a generator seeded from (seed, repetition, class); the first
/// ceil(fraction * n_class) rows go to train. Deterministic, disjoint and
/// exhaustive for every (seed, repetition).
SplitIndices stratified_split(const std::vector<Label>& labels, const SplitSpec& spec,
                              std::size_t repetition_index);

/// Manifest-level wrapper around stratified_split.
std::pair<CorpusManifest, CorpusManifest> split(const CorpusManifest& m, const SplitSpec& spec,
                                                std::size_t repetition_index);

}  // namespace colorstat
