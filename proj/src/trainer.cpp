#include "modnet/trainer.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "modnet/errors.hpp"
#include "modnet/rng.hpp"

namespace modnet {

void TrainConfig::validate(std::size_t output_size) const {
    // learning_rate 0 and epochs 0 are allowed as explicit no-ops.
    if (learning_rate < 0.0 || !std::isfinite(learning_rate)) throw ValueError("learning_rate must be non-negative");
    if (weight_decay < 0.0) throw ValueError("weight_decay must be non-negative");
    if (loss_mask.size() != output_size) throw ShapeError("loss_mask length does not match output layer");
    if (std::find(loss_mask.begin(), loss_mask.end(), true) == loss_mask.end())
        throw ValueError("loss_mask must select at least one output unit");
}

std::vector<bool> mask_all(std::size_t output_size) { return std::vector<bool>(output_size, true); }

std::vector<bool> mask_for_codec(const LabelCodec& codec, std::size_t output_size) {
    if (static_cast<std::size_t>(codec.offset + codec.width) > output_size)
        throw ShapeError("codec region exceeds output layer");
    std::vector<bool> mask(output_size, false);
    for (int k = 0; k < codec.width; ++k) mask[static_cast<std::size_t>(codec.offset + k)] = true;
    return mask;
}

namespace {

void check_pattern_dims(const Network& net, const Pattern& p) {
    if (p.input.size() != net.spec.input_size()) throw ShapeError("pattern input does not match network input layer");
    if (p.target.size() != net.spec.output_size())
        throw ShapeError("pattern target does not match network output layer");
}

// Backward pass from a completed forward trace. Writes gradients of
// E = 1/2 sum_masked (target - output)^2 into grads.
void backward(const Network& net, const ActivationTrace& trace, const Pattern& pattern,
              const std::vector<bool>& mask, Gradients& grads) {
    const std::size_t n_conn = net.weights.size();
    const std::vector<double>& output = trace.output();

    std::vector<double> delta(output.size());
    for (std::size_t j = 0; j < output.size(); ++j) {
        double a = output[j];
        delta[j] = mask[j] ? (a - pattern.target[j]) * a * (1.0 - a) : 0.0;
    }

    for (std::size_t l = n_conn; l-- > 0;) {
        const std::vector<double>& prev = trace.layers[l];
        Matrix& gw = grads.weights[l];
        std::vector<double>& gb = grads.biases[l];
        for (std::size_t j = 0; j < delta.size(); ++j) {
            double* grow = gw.data.data() + j * gw.cols;
            for (std::size_t i = 0; i < prev.size(); ++i) grow[i] = delta[j] * prev[i];
            gb[j] = delta[j];
        }
        if (l == 0) break;

        const Matrix& w = net.weights[l];
        std::vector<double> prev_delta(prev.size(), 0.0);
        for (std::size_t j = 0; j < delta.size(); ++j) {
            const double* row = w.data.data() + j * w.cols;
            for (std::size_t i = 0; i < prev.size(); ++i) prev_delta[i] += row[i] * delta[j];
        }
        for (std::size_t i = 0; i < prev.size(); ++i) prev_delta[i] *= prev[i] * (1.0 - prev[i]);
        delta = std::move(prev_delta);
    }
}

Gradients make_zero_gradients(const Network& net) {
    Gradients grads;
    grads.weights.reserve(net.weights.size());
    grads.biases.reserve(net.biases.size());
    for (std::size_t l = 0; l < net.weights.size(); ++l) {
        grads.weights.emplace_back(net.weights[l].rows, net.weights[l].cols);
        grads.biases.emplace_back(net.biases[l].size(), 0.0);
    }
    return grads;
}

}  // namespace

double pattern_loss(const ActivationTrace& trace, const Pattern& pattern, const std::vector<bool>& mask) {
    const std::vector<double>& output = trace.output();
    double loss = 0.0;
    for (std::size_t j = 0; j < output.size(); ++j) {
        if (!mask[j]) continue;
        double e = pattern.target[j] - output[j];
        loss += e * e;
    }
    return 0.5 * loss;
}

Gradients gradient(const Network& net, const Pattern& pattern, const std::vector<bool>& mask) {
    check_pattern_dims(net, pattern);
    if (mask.size() != net.spec.output_size()) throw ShapeError("mask length does not match output layer");
    if (std::find(mask.begin(), mask.end(), true) == mask.end())
        throw ValueError("mask must select at least one output unit");

    Gradients grads = make_zero_gradients(net);
    ActivationTrace trace = forward(net, pattern.input);
    backward(net, trace, pattern, mask, grads);
    return grads;
}

std::pair<Network, LossTrace> train(const Network& net, const Dataset& data, const TrainConfig& cfg) {
    cfg.validate(net.spec.output_size());
    if (data.patterns.empty()) throw ValueError("cannot train on an empty dataset");
    for (const Pattern& p : data.patterns) check_pattern_dims(net, p);

    Network work = net;
    Gradients grads = make_zero_gradients(net);
    LossTrace trace;
    trace.reserve(cfg.epochs);

    std::vector<std::size_t> order(data.patterns.size());
    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        Rng rng(derive_seed(cfg.shuffle_seed, "epoch:" + std::to_string(epoch)));
        rng.shuffle(order);

        double loss_sum = 0.0;
        for (std::size_t idx : order) {
            const Pattern& pattern = data.patterns[idx];
            ActivationTrace act = forward(work, pattern.input);
            loss_sum += pattern_loss(act, pattern, cfg.loss_mask);
            backward(work, act, pattern, cfg.loss_mask, grads);

            for (std::size_t l = 0; l < work.weights.size(); ++l) {
                double* w = work.weights[l].data.data();
                const double* gw = grads.weights[l].data.data();
                for (std::size_t k = 0; k < work.weights[l].size(); ++k)
                    w[k] = w[k] - cfg.learning_rate * (gw[k] + cfg.weight_decay * w[k]);
                double* b = work.biases[l].data();
                const double* gb = grads.biases[l].data();
                for (std::size_t k = 0; k < work.biases[l].size(); ++k)
                    b[k] = b[k] - cfg.learning_rate * gb[k];
            }
        }

        double mean_loss = loss_sum / static_cast<double>(data.patterns.size());
        if (!std::isfinite(mean_loss))
            throw TrainingDiverged("non-finite loss at epoch " + std::to_string(epoch));
        trace.push_back(mean_loss);
    }
    return {std::move(work), std::move(trace)};
}

std::pair<Network, Network> fork_specialize(const Network& base, const Dataset& data, const TrainConfig& cfg_a,
                                            const TrainConfig& cfg_b) {
    cfg_a.validate(base.spec.output_size());
    cfg_b.validate(base.spec.output_size());
    for (std::size_t j = 0; j < base.spec.output_size(); ++j)
        if (cfg_a.loss_mask[j] && cfg_b.loss_mask[j])
            throw ValueError("subtask masks overlap at output unit " + std::to_string(j));

    auto [net_a, trace_a] = train(base, data, cfg_a);
    auto [net_b, trace_b] = train(base, data, cfg_b);
    return {std::move(net_a), std::move(net_b)};
}

}  // namespace modnet
