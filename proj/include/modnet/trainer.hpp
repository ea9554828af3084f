#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "modnet/dataset.hpp"
#include "modnet/network.hpp"

namespace modnet {

/// Backpropagation settings. The loss is E = 1/2 * sum over masked output
/// units of (target - output)^2, minimized by per-pattern updates
///   w <- w - learning_rate * (dE/dw + weight_decay * w)
///   b <- b - learning_rate * dE/db          (biases are not decayed)
struct TrainConfig {
    double learning_rate = 0.1;
    std::size_t epochs = 1;
    double weight_decay = 0.0;
    std::uint64_t shuffle_seed = 0;
    std::vector<bool> loss_mask;  ///< one flag per output unit; true = contributes to error

    void validate(std::size_t output_size) const;
};

/// Mean masked per-pattern loss of each completed epoch.
using LossTrace = std::vector<double>;

/// Per-layer gradients, same shapes as the network's parameters.
struct Gradients {
    std::vector<Matrix> weights;
    std::vector<std::vector<double>> biases;
};

std::vector<bool> mask_all(std::size_t output_size);

/// Mask selecting exactly one codec's slice of the output layer.
std::vector<bool> mask_for_codec(const LabelCodec& codec, std::size_t output_size);

/// Reverse-mode gradients of the masked loss for one pattern.
/// Masked-out output units contribute zero error signal.
Gradients gradient(const Network& net, const Pattern& pattern, const std::vector<bool>& mask);

/// Masked per-pattern loss (with the 1/2 factor) from a completed forward pass.
double pattern_loss(const ActivationTrace& trace, const Pattern& pattern, const std::vector<bool>& mask);

/// Stochastic gradient descent over the dataset. Patterns are visited in
/// an order drawn deterministically from (shuffle_seed, epoch index), so
/// the result is a pure function of (net, data, cfg). Throws
/// TrainingDiverged naming the epoch if the loss goes non-finite.
std::pair<Network, LossTrace> train(const Network& net, const Dataset& data, const TrainConfig& cfg);

/// Copies the base network twice and trains one copy per config. The two
/// masks must select disjoint, non-empty output regions.
std::pair<Network, Network> fork_specialize(const Network& base, const Dataset& data, const TrainConfig& cfg_a,
                                            const TrainConfig& cfg_b);

}  // namespace modnet
