#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace modnet {

/// Which label of a pattern a codec reads.
enum class LabelKind { Identity, Emotion };

/// How class indices map to bit codewords.
enum class CodeKind {
    Binary,  ///< class index in binary, most-significant bit first
    OneHot,
};

/// Maps class labels to a region of the output vector and back.
///
/// A codec owns a half-open slice [offset, offset+width) of the target /
/// output vector. Decoding picks the class whose codeword is nearest in
/// Euclidean distance to the slice of the raw analog output; ties go to
/// the lowest class index.
struct LabelCodec {
    std::string name;       ///< subtask name used in reports ("identity", "emotion")
    LabelKind label;
    CodeKind kind;
    int n_classes = 0;
    int offset = 0;         ///< start within the output vector
    int width = 0;          ///< codeword length in bits

    /// 0/1 codeword of a class.
    std::vector<double> codeword(int cls) const;

    /// Nearest-codeword class for the codec's slice of a raw output vector.
    int decode(std::span<const double> output) const;

    /// Writes the codeword of cls into target at the codec's offset.
    void encode_into(int cls, std::vector<double>& target) const;
};

/// Binary identity codec covering n_classes, placed at offset.
/// Width is the smallest bit count that can address all classes
/// (6 bits for 53 classes).
LabelCodec identity_codec(int n_classes, int offset = 0);

/// One-hot emotion codec of n_classes, placed at offset.
LabelCodec emotion_codec(int n_classes, int offset);

/// Smallest w with 2^w >= n_classes (at least 1).
int binary_code_width(int n_classes);

}  // namespace modnet
