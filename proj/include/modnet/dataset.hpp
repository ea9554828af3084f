#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "modnet/codec.hpp"

namespace modnet {

/// One labeled input image, flattened row-major, plus its encoded target.
struct Pattern {
    std::vector<double> input;   ///< pixel values in [0,1]
    int identity = 0;
    int emotion = 0;             ///< 0 = neutral, 1 = smiling, 2 = crying
    std::vector<double> target;  ///< codec bits, identity code then emotion one-hot

    friend bool operator==(const Pattern& a, const Pattern& b) = default;
};

struct Dataset {
    std::vector<Pattern> patterns;
    int n_identities = 0;
    int n_emotions = 0;
    std::string provenance;

    std::size_t size() const { return patterns.size(); }
    std::size_t input_width() const { return patterns.empty() ? 0 : patterns.front().input.size(); }
    std::size_t target_width() const { return patterns.empty() ? 0 : patterns.front().target.size(); }

    /// All patterns share input/target dimensions; labels within counts.
    void validate() const;
};

/// Parameters of the synthetic face-like generator. Images are 20x20.
/// Each identity gets a prototype drawn uniformly from
/// [0.5 - prototype_noise, 0.5 + prototype_noise]; each emotion adds a
/// fixed comb template of amplitude 0.2 on the rows
/// [band_row_lo, band_row_hi]; samples add white gaussian noise of scale
/// sample_noise. Everything is clipped to [0,1].
struct SynthSpec {
    int n_identities = 53;
    int n_emotions = 3;
    int samples_per_cell = 1;
    int band_row_lo = 12;
    int band_row_hi = 15;
    double prototype_noise = 0.3;
    double sample_noise = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
};

inline constexpr std::size_t kSynthImageRows = 20;
inline constexpr std::size_t kSynthImageCols = 20;
inline constexpr double kEmotionAmplitude = 0.2;

/// Identity codec at offset 0 followed by a one-hot emotion codec.
std::vector<LabelCodec> default_codecs(int n_identities, int n_emotions);

/// Total target width implied by a codec list.
std::size_t target_width(const std::vector<LabelCodec>& codecs);

/// Deterministic synthetic dataset; same spec gives bit-identical output.
/// Pattern order: identity-major, then emotion, then sample index.
Dataset synth_faces(const SynthSpec& spec);

/// Copy of a dataset with targets re-encoded for a different codec layout.
Dataset with_targets(const Dataset& data, const std::vector<LabelCodec>& codecs);

/// Loads every *.pgm under dir (non-recursive, sorted by filename).
/// Filenames follow <identity>_<emotion>[_<anything>].pgm where identity
/// is a non-negative integer and emotion is an index or one of
/// neutral/smiling/crying. Images are area-averaged down to grid_rows x
/// grid_cols and min-max normalized per image (constant image -> 0.5).
Dataset load_images(const std::filesystem::path& dir, std::size_t grid_rows = 20, std::size_t grid_cols = 20);

/// Seeded per-identity split: train_per_identity samples to train,
/// the rest to test. Every identity must have more samples than that.
std::pair<Dataset, Dataset> split(const Dataset& data, int train_per_identity, std::uint64_t seed);

/// One row per pattern: identity, emotion, input values.
void export_csv(const Dataset& data, const std::filesystem::path& path);

}  // namespace modnet
