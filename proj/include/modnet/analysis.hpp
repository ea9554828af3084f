#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modnet/dataset.hpp"
#include "modnet/matrix.hpp"
#include "modnet/network.hpp"

namespace modnet {

/// Per-subtask evaluation result. confusion(row, col) counts patterns of
/// true class `row` decoded as class `col`.
struct SubtaskEval {
    std::string name;
    Matrix confusion;
    double accuracy = 0.0;
};

/// Accuracy report for one network over one dataset; the unit of the
/// task-optimization and overfitting tables.
struct EvalReport {
    std::vector<SubtaskEval> subtasks;
    double combined_accuracy = 0.0;  ///< unweighted mean of subtask accuracies
    std::size_t pattern_count = 0;

    const SubtaskEval& subtask(std::string_view name) const;
};

/// One evaluated point of a blend sweep.
struct SweepPoint {
    double parameter = 0.0;
    EvalReport report;
};

/// Equal-width histogram plus the sample's mean and population variance.
struct Histogram {
    std::vector<double> edges;         ///< bins + 1 ascending values
    std::vector<std::int64_t> counts;  ///< one per bin; sums to sample size
    double mean = 0.0;
    double variance = 0.0;  ///< population variance (divide by n)
};

/// Forward + decode every pattern with every codec. Codec regions must be
/// disjoint and inside the output layer; the dataset must be non-empty.
EvalReport evaluate(const Network& net, const Dataset& data, const std::vector<LabelCodec>& codecs);

/// Histogram over all weights and biases pooled. Bins span [min, max] of
/// the sample; a degenerate sample (min == max) collapses to one bin.
Histogram weight_histogram(const Network& net, std::size_t bins);

/// Mean activation of each unit in `layer` over the dataset, binned over
/// [0, 1]. Layer 0 is the input and is not allowed.
Histogram firing_rate_distribution(const Network& net, const Dataset& data, std::size_t layer, std::size_t bins);

/// Fraction of `layer` units whose mean activation over the dataset is
/// below `threshold`.
double low_activation_fraction(const Network& net, const Dataset& data, std::size_t layer, double threshold);

using PatternFilter = std::function<bool(const Pattern&)>;

PatternFilter filter_identity(int identity);
PatternFilter filter_emotion(int emotion);

/// Elementwise mean of the layer's activations over patterns matching the
/// filter. Throws NoMatchError when nothing matches.
std::vector<double> hidden_superposition(const Network& net, const Dataset& data, const PatternFilter& filter,
                                         std::size_t layer);

/// Rank-order statistics of one sweep trajectory per subtask.
/// spearman_rho is 0 by convention when either series is constant.
/// sign_changes counts sign flips in the first difference of the accuracy
/// series; zero differences neither count nor reset the previous sign.
struct TrajectoryStats {
    std::string subtask;
    double spearman_rho = 0.0;
    std::size_t sign_changes = 0;
};

std::vector<TrajectoryStats> trajectory_stats(const std::vector<SweepPoint>& sweep);

/// Spearman rank correlation with average ranks on ties; 0 when either
/// input has no rank variance.
double spearman_rho(std::span<const double> xs, std::span<const double> ys);

}  // namespace modnet
