#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "modnet/matrix.hpp"

namespace modnet {

/// Architecture of a fully connected feedforward network.
/// All hidden and output units use the logistic sigmoid.
struct NetworkSpec {
    std::vector<std::size_t> layer_sizes;

    std::size_t n_connection_layers() const { return layer_sizes.size() - 1; }
    std::size_t input_size() const { return layer_sizes.front(); }
    std::size_t output_size() const { return layer_sizes.back(); }

    /// Throws ShapeError unless there are >= 2 layers, each non-empty.
    void validate() const;

    friend bool operator==(const NetworkSpec& a, const NetworkSpec& b) = default;
};

/// Weight matrices and bias vectors of one network. weights[l] has shape
/// (layer_sizes[l+1] x layer_sizes[l]); biases[l] has layer_sizes[l+1]
/// entries. This is the primary weight matrix that modulation acts on.
struct Network {
    NetworkSpec spec;
    std::vector<Matrix> weights;
    std::vector<std::vector<double>> biases;

    /// Shapes consistent with spec and every value finite; throws otherwise.
    void validate() const;

    /// Total number of stored reals (weights + biases).
    std::size_t parameter_count() const;

    friend bool operator==(const Network& a, const Network& b) = default;
};

/// Per-layer unit activations for one input; layers[0] is the input itself.
struct ActivationTrace {
    std::vector<std::vector<double>> layers;

    const std::vector<double>& output() const { return layers.back(); }
};

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

/// Fresh network with all weights and biases drawn independently and
/// uniformly from [-half_range, +half_range).
///
/// Draw order is fixed: connection layers in ascending order, weights
/// row-major first, then the bias vector, all from one splitmix64 stream
/// seeded with `seed`. Identical (spec, seed, half_range) yield
/// bit-identical networks.
Network init_network(const NetworkSpec& spec, std::uint64_t seed, double half_range);

/// Full forward pass; a_l = sigmoid(W_{l-1} a_{l-1} + b_{l-1}).
ActivationTrace forward(const Network& net, std::span<const double> input);

}  // namespace modnet
