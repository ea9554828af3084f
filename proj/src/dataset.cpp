#include "modnet/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "modnet/errors.hpp"
#include "modnet/format.hpp"
#include "modnet/pgm.hpp"
#include "modnet/rng.hpp"

namespace modnet {

namespace {

double clip01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

int label_of(const Pattern& p, const LabelCodec& codec) {
    return codec.label == LabelKind::Identity ? p.identity : p.emotion;
}

}  // namespace

void Dataset::validate() const {
    for (const Pattern& p : patterns) {
        if (p.input.size() != input_width() || p.target.size() != target_width())
            throw ShapeError("patterns disagree on input/target dimensions");
        if (p.identity < 0 || p.identity >= n_identities) throw ValueError("identity label out of range");
        if (p.emotion < 0 || p.emotion >= n_emotions) throw ValueError("emotion label out of range");
    }
}

void SynthSpec::validate() const {
    if (n_identities < 1 || n_emotions < 1 || samples_per_cell < 1)
        throw ValueError("synthetic spec counts must be positive");
    if (band_row_lo < 0 || band_row_hi >= static_cast<int>(kSynthImageRows) || band_row_lo > band_row_hi)
        throw ValueError("emotion band rows must lie within the image");
    if (prototype_noise < 0.0 || sample_noise < 0.0) throw ValueError("noise scales must be non-negative");
}

std::vector<LabelCodec> default_codecs(int n_identities, int n_emotions) {
    LabelCodec id = identity_codec(n_identities, 0);
    LabelCodec emo = emotion_codec(n_emotions, id.width);
    return {id, emo};
}

std::size_t target_width(const std::vector<LabelCodec>& codecs) {
    std::size_t width = 0;
    for (const LabelCodec& c : codecs) width = std::max(width, static_cast<std::size_t>(c.offset + c.width));
    return width;
}

Dataset synth_faces(const SynthSpec& spec) {
    spec.validate();
    const std::size_t pixels = kSynthImageRows * kSynthImageCols;
    Rng rng(spec.seed);

    std::vector<std::vector<double>> prototypes(static_cast<std::size_t>(spec.n_identities));
    for (auto& proto : prototypes) {
        proto.resize(pixels);
        for (double& v : proto) v = rng.uniform(0.5 - spec.prototype_noise, 0.5 + spec.prototype_noise);
    }

    const std::vector<LabelCodec> codecs = default_codecs(spec.n_identities, spec.n_emotions);
    const std::size_t twidth = target_width(codecs);

    Dataset data;
    data.n_identities = spec.n_identities;
    data.n_emotions = spec.n_emotions;
    {
        std::ostringstream tag;
        tag << "synthetic(identities=" << spec.n_identities << ",emotions=" << spec.n_emotions
            << ",samples_per_cell=" << spec.samples_per_cell << ",band=" << spec.band_row_lo << ".."
            << spec.band_row_hi << ",prototype_noise=" << format_real(spec.prototype_noise)
            << ",sample_noise=" << format_real(spec.sample_noise) << ",seed=" << spec.seed << ")";
        data.provenance = tag.str();
    }

    for (int id = 0; id < spec.n_identities; ++id) {
        for (int emo = 0; emo < spec.n_emotions; ++emo) {
            for (int s = 0; s < spec.samples_per_cell; ++s) {
                Pattern p;
                p.identity = id;
                p.emotion = emo;
                p.input.resize(pixels);
                for (std::size_t r = 0; r < kSynthImageRows; ++r) {
                    bool in_band = static_cast<int>(r) >= spec.band_row_lo && static_cast<int>(r) <= spec.band_row_hi;
                    for (std::size_t c = 0; c < kSynthImageCols; ++c) {
                        double v = prototypes[static_cast<std::size_t>(id)][r * kSynthImageCols + c];
                        if (in_band && static_cast<int>(c % static_cast<std::size_t>(spec.n_emotions)) == emo)
                            v += kEmotionAmplitude;
                        v += spec.sample_noise * rng.gaussian();
                        p.input[r * kSynthImageCols + c] = clip01(v);
                    }
                }
                p.target.assign(twidth, 0.0);
                for (const LabelCodec& codec : codecs) codec.encode_into(label_of(p, codec), p.target);
                data.patterns.push_back(std::move(p));
            }
        }
    }
    return data;
}

Dataset with_targets(const Dataset& data, const std::vector<LabelCodec>& codecs) {
    const std::size_t twidth = target_width(codecs);
    Dataset out = data;
    for (Pattern& p : out.patterns) {
        p.target.assign(twidth, 0.0);
        for (const LabelCodec& codec : codecs) codec.encode_into(label_of(p, codec), p.target);
    }
    return out;
}

namespace {

int parse_emotion_token(const std::string& token, const std::filesystem::path& path) {
    static const std::map<std::string, int> names = {{"neutral", 0}, {"smiling", 1}, {"crying", 2}};
    if (auto it = names.find(token); it != names.end()) return it->second;
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
        throw FormatError("cannot parse emotion from filename: " + path.string());
    return value;
}

}  // namespace

Dataset load_images(const std::filesystem::path& dir, std::size_t grid_rows, std::size_t grid_cols) {
    if (!std::filesystem::is_directory(dir)) throw IoError("not a directory: " + dir.string());

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string ext = entry.path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
        if (ext == ".pgm") files.push_back(entry.path());
    }
    if (files.empty()) throw FormatError("no .pgm files under " + dir.string());
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });

    Dataset data;
    data.provenance = "directory(" + dir.string() + ")";
    int max_identity = -1;
    int max_emotion = -1;
    for (const auto& file : files) {
        std::string stem = file.stem().string();
        auto underscore = stem.find('_');
        if (underscore == std::string::npos)
            throw FormatError("filename lacks <identity>_<emotion> pattern: " + file.string());
        std::string id_token = stem.substr(0, underscore);
        std::string rest = stem.substr(underscore + 1);
        std::string emo_token = rest.substr(0, rest.find('_'));

        Pattern p;
        auto [ptr, ec] = std::from_chars(id_token.data(), id_token.data() + id_token.size(), p.identity);
        if (ec != std::errc() || ptr != id_token.data() + id_token.size() || p.identity < 0)
            throw FormatError("cannot parse identity from filename: " + file.string());
        p.emotion = parse_emotion_token(emo_token, file);

        GrayImage img = area_resample(read_pgm(file), grid_rows, grid_cols);
        double lo = img.pixels.front(), hi = img.pixels.front();
        for (double v : img.pixels) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        p.input.resize(img.pixels.size());
        for (std::size_t i = 0; i < img.pixels.size(); ++i)
            p.input[i] = hi > lo ? (img.pixels[i] - lo) / (hi - lo) : 0.5;

        max_identity = std::max(max_identity, p.identity);
        max_emotion = std::max(max_emotion, p.emotion);
        data.patterns.push_back(std::move(p));
    }

    data.n_identities = max_identity + 1;
    data.n_emotions = std::max(max_emotion + 1, 1);
    const std::vector<LabelCodec> codecs = default_codecs(data.n_identities, data.n_emotions);
    const std::size_t twidth = target_width(codecs);
    for (Pattern& p : data.patterns) {
        p.target.assign(twidth, 0.0);
        for (const LabelCodec& codec : codecs) codec.encode_into(label_of(p, codec), p.target);
    }
    return data;
}

std::pair<Dataset, Dataset> split(const Dataset& data, int train_per_identity, std::uint64_t seed) {
    if (train_per_identity < 1) throw ValueError("train_per_identity must be positive");

    std::map<int, std::vector<std::size_t>> by_identity;
    for (std::size_t i = 0; i < data.patterns.size(); ++i) by_identity[data.patterns[i].identity].push_back(i);

    std::vector<bool> in_train(data.patterns.size(), false);
    for (auto& [identity, indices] : by_identity) {
        if (indices.size() <= static_cast<std::size_t>(train_per_identity))
            throw ValueError("identity " + std::to_string(identity) + " has " + std::to_string(indices.size()) +
                             " samples, needs more than " + std::to_string(train_per_identity));
        Rng rng(derive_seed(seed, "split:" + std::to_string(identity)));
        rng.shuffle(indices);
        for (int k = 0; k < train_per_identity; ++k) in_train[indices[static_cast<std::size_t>(k)]] = true;
    }

    Dataset train, test;
    train.n_identities = test.n_identities = data.n_identities;
    train.n_emotions = test.n_emotions = data.n_emotions;
    train.provenance = data.provenance + " [train]";
    test.provenance = data.provenance + " [test]";
    for (std::size_t i = 0; i < data.patterns.size(); ++i)
        (in_train[i] ? train : test).patterns.push_back(data.patterns[i]);
    return {std::move(train), std::move(test)};
}

void export_csv(const Dataset& data, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string());
    out << "identity,emotion";
    for (std::size_t i = 0; i < data.input_width(); ++i) out << ",x" << i;
    out << "\n";
    for (const Pattern& p : data.patterns) {
        out << p.identity << "," << p.emotion;
        for (double v : p.input) out << "," << format_real(v);
        out << "\n";
    }
    if (!out.flush()) throw IoError("write failed: " + path.string());
}

}  // namespace modnet
