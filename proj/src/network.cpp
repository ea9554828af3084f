#include "modnet/network.hpp"

#include <cmath>
#include <string>

#include "modnet/errors.hpp"
#include "modnet/rng.hpp"

namespace modnet {

void NetworkSpec::validate() const {
    if (layer_sizes.size() < 2) throw ShapeError("network needs at least an input and an output layer");
    for (std::size_t s : layer_sizes)
        if (s < 1) throw ShapeError("every layer must have at least one unit");
}

void Network::validate() const {
    spec.validate();
    if (weights.size() != spec.n_connection_layers() || biases.size() != spec.n_connection_layers())
        throw ShapeError("layer count does not match spec");
    for (std::size_t l = 0; l < weights.size(); ++l) {
        if (weights[l].rows != spec.layer_sizes[l + 1] || weights[l].cols != spec.layer_sizes[l])
            throw ShapeError("weight matrix shape mismatch at layer " + std::to_string(l));
        if (biases[l].size() != spec.layer_sizes[l + 1])
            throw ShapeError("bias length mismatch at layer " + std::to_string(l));
        for (double w : weights[l].data)
            if (!std::isfinite(w)) throw ValueError("non-finite weight at layer " + std::to_string(l));
        for (double b : biases[l])
            if (!std::isfinite(b)) throw ValueError("non-finite bias at layer " + std::to_string(l));
    }
}

std::size_t Network::parameter_count() const {
    std::size_t n = 0;
    for (std::size_t l = 0; l < weights.size(); ++l) n += weights[l].size() + biases[l].size();
    return n;
}

Network init_network(const NetworkSpec& spec, std::uint64_t seed, double half_range) {
    spec.validate();
    if (!(half_range > 0.0)) throw ValueError("half_range must be positive");

    Rng rng(seed);
    Network net;
    net.spec = spec;
    net.weights.reserve(spec.n_connection_layers());
    net.biases.reserve(spec.n_connection_layers());
    for (std::size_t l = 0; l + 1 < spec.layer_sizes.size(); ++l) {
        Matrix w(spec.layer_sizes[l + 1], spec.layer_sizes[l]);
        for (double& v : w.data) v = rng.uniform(-half_range, half_range);
        std::vector<double> b(spec.layer_sizes[l + 1]);
        for (double& v : b) v = rng.uniform(-half_range, half_range);
        net.weights.push_back(std::move(w));
        net.biases.push_back(std::move(b));
    }
    return net;
}

ActivationTrace forward(const Network& net, std::span<const double> input) {
    if (input.size() != net.spec.input_size())
        throw ShapeError("input length " + std::to_string(input.size()) + " does not match input layer " +
                         std::to_string(net.spec.input_size()));

    ActivationTrace trace;
    trace.layers.reserve(net.spec.layer_sizes.size());
    trace.layers.emplace_back(input.begin(), input.end());
    for (std::size_t l = 0; l < net.weights.size(); ++l) {
        const Matrix& w = net.weights[l];
        const std::vector<double>& prev = trace.layers.back();
        std::vector<double> act(w.rows);
        for (std::size_t j = 0; j < w.rows; ++j) {
            double z = net.biases[l][j];
            const double* row = w.data.data() + j * w.cols;
            for (std::size_t i = 0; i < w.cols; ++i) z += row[i] * prev[i];
            act[j] = sigmoid(z);
        }
        trace.layers.push_back(std::move(act));
    }
    return trace;
}

}  // namespace modnet
