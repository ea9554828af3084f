#include "modnet/codec.hpp"

#include "modnet/errors.hpp"

namespace modnet {

int binary_code_width(int n_classes) {
    int w = 1;
    while ((1LL << w) < n_classes) ++w;
    return w;
}

std::vector<double> LabelCodec::codeword(int cls) const {
    if (cls < 0 || cls >= n_classes) throw ValueError("class index out of range: " + std::to_string(cls));
    std::vector<double> bits(static_cast<std::size_t>(width), 0.0);
    if (kind == CodeKind::OneHot) {
        bits[static_cast<std::size_t>(cls)] = 1.0;
    } else {
        for (int k = 0; k < width; ++k) bits[static_cast<std::size_t>(k)] = (cls >> (width - 1 - k)) & 1;
    }
    return bits;
}

int LabelCodec::decode(std::span<const double> output) const {
    if (output.size() < static_cast<std::size_t>(offset + width))
        throw ShapeError("output vector shorter than codec region");
    int best = 0;
    double best_dist = 0.0;
    for (int cls = 0; cls < n_classes; ++cls) {
        std::vector<double> word = codeword(cls);
        double dist = 0.0;
        for (int k = 0; k < width; ++k) {
            double d = output[static_cast<std::size_t>(offset + k)] - word[static_cast<std::size_t>(k)];
            dist += d * d;
        }
        if (cls == 0 || dist < best_dist) {
            best = cls;
            best_dist = dist;
        }
    }
    return best;
}

void LabelCodec::encode_into(int cls, std::vector<double>& target) const {
    if (target.size() < static_cast<std::size_t>(offset + width))
        throw ShapeError("target vector shorter than codec region");
    std::vector<double> word = codeword(cls);
    for (int k = 0; k < width; ++k) target[static_cast<std::size_t>(offset + k)] = word[static_cast<std::size_t>(k)];
}

LabelCodec identity_codec(int n_classes, int offset) {
    if (n_classes < 1) throw ValueError("identity codec needs at least one class");
    return LabelCodec{"identity", LabelKind::Identity, CodeKind::Binary,
                      n_classes, offset, binary_code_width(n_classes)};
}

LabelCodec emotion_codec(int n_classes, int offset) {
    if (n_classes < 1) throw ValueError("emotion codec needs at least one class");
    return LabelCodec{"emotion", LabelKind::Emotion, CodeKind::OneHot, n_classes, offset, n_classes};
}

}  // namespace modnet
