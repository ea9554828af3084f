#include "modnet/modulation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modnet/errors.hpp"
#include "modnet/hash.hpp"
#include "modnet/rng.hpp"

namespace modnet {

void ModulationMatrix::validate() const {
    spec.validate();
    if (delta_weights.size() != spec.n_connection_layers() || delta_biases.size() != spec.n_connection_layers())
        throw ShapeError("modulation layer count does not match spec");
    for (std::size_t l = 0; l < delta_weights.size(); ++l) {
        if (delta_weights[l].rows != spec.layer_sizes[l + 1] || delta_weights[l].cols != spec.layer_sizes[l])
            throw ShapeError("delta weight shape mismatch at layer " + std::to_string(l));
        if (delta_biases[l].size() != spec.layer_sizes[l + 1])
            throw ShapeError("delta bias length mismatch at layer " + std::to_string(l));
    }
}

std::uint64_t payload_checksum(const Network& net) {
    PayloadHasher hasher;
    for (std::size_t l = 0; l < net.weights.size(); ++l) {
        for (double v : net.weights[l].data) hasher.add(v);
        for (double v : net.biases[l]) hasher.add(v);
    }
    return hasher.value();
}

std::uint64_t payload_checksum(const ModulationMatrix& mod) {
    PayloadHasher hasher;
    for (std::size_t l = 0; l < mod.delta_weights.size(); ++l) {
        for (double v : mod.delta_weights[l].data) hasher.add(v);
        for (double v : mod.delta_biases[l]) hasher.add(v);
    }
    for (const auto& fix : mod.endpoint_fixes) {
        hasher.add_u64(fix.layer);
        hasher.add_u64(fix.is_bias ? 1 : 0);
        hasher.add_u64(fix.row);
        hasher.add_u64(fix.col);
        hasher.add(fix.value);
    }
    return hasher.value();
}

ModulationMatrix diff(const Network& net_a, const Network& net_b) {
    if (net_a.spec != net_b.spec) throw ShapeError("cannot diff networks with different specs");

    ModulationMatrix mod;
    mod.spec = net_a.spec;
    mod.source_checksum_a = payload_checksum(net_a);
    mod.source_checksum_b = payload_checksum(net_b);
    mod.delta_weights.reserve(net_a.weights.size());
    mod.delta_biases.reserve(net_a.biases.size());

    auto subtract = [&mod](std::size_t layer, bool is_bias, std::size_t row, std::size_t col, double a, double b) {
        double delta = b - a;
        // Bitwise compare so signed zeros round-trip too.
        if (std::bit_cast<std::uint64_t>(a + delta) != std::bit_cast<std::uint64_t>(b))
            mod.endpoint_fixes.push_back({layer, is_bias, row, col, b});
        return delta;
    };

    for (std::size_t l = 0; l < net_a.weights.size(); ++l) {
        const Matrix& wa = net_a.weights[l];
        const Matrix& wb = net_b.weights[l];
        Matrix dw(wa.rows, wa.cols);
        for (std::size_t r = 0; r < wa.rows; ++r)
            for (std::size_t c = 0; c < wa.cols; ++c) dw(r, c) = subtract(l, false, r, c, wa(r, c), wb(r, c));
        mod.delta_weights.push_back(std::move(dw));

        std::vector<double> db(net_a.biases[l].size());
        for (std::size_t r = 0; r < db.size(); ++r)
            db[r] = subtract(l, true, r, 0, net_a.biases[l][r], net_b.biases[l][r]);
        mod.delta_biases.push_back(std::move(db));
    }
    return mod;
}

std::vector<ThresholdEntry> threshold_map(const ModulationMatrix& mod, double tau) {
    if (!(tau > 0.0)) throw ValueError("tau must be positive");

    std::vector<ThresholdEntry> entries;
    for (std::size_t l = 0; l < mod.delta_weights.size(); ++l) {
        const Matrix& dw = mod.delta_weights[l];
        for (std::size_t r = 0; r < dw.rows; ++r)
            for (std::size_t c = 0; c < dw.cols; ++c)
                if (std::abs(dw(r, c)) >= tau) entries.push_back({l, r, c, dw(r, c)});
    }
    std::sort(entries.begin(), entries.end(), [](const ThresholdEntry& a, const ThresholdEntry& b) {
        double ma = std::abs(a.delta), mb = std::abs(b.delta);
        if (ma != mb) return ma > mb;
        return std::tie(a.layer, a.row, a.col) < std::tie(b.layer, b.row, b.col);
    });
    return entries;
}

Matrix source_unit_map(const ModulationMatrix& mod, std::size_t rows, std::size_t cols) {
    const Matrix& dw0 = mod.delta_weights.front();
    if (rows * cols != dw0.cols) throw ShapeError("grid does not cover the input layer");

    Matrix grid(rows, cols);
    for (std::size_t j = 0; j < dw0.cols; ++j) {
        double score = 0.0;
        for (std::size_t i = 0; i < dw0.rows; ++i) score = std::max(score, std::abs(dw0(i, j)));
        grid.data[j] = score;
    }
    return grid;
}

namespace {

std::vector<ParamCoord> nonzero_coords(const ModulationMatrix& mod) {
    std::vector<ParamCoord> coords;
    for (std::size_t l = 0; l < mod.delta_weights.size(); ++l) {
        const Matrix& dw = mod.delta_weights[l];
        for (std::size_t r = 0; r < dw.rows; ++r)
            for (std::size_t c = 0; c < dw.cols; ++c)
                if (dw(r, c) != 0.0) coords.push_back({l, false, r, c});
        for (std::size_t r = 0; r < mod.delta_biases[l].size(); ++r)
            if (mod.delta_biases[l][r] != 0.0) coords.push_back({l, true, r, 0});
    }
    return coords;
}

double delta_at(const ModulationMatrix& mod, const ParamCoord& coord) {
    return coord.is_bias ? mod.delta_biases[coord.layer][coord.row] : mod.delta_weights[coord.layer](coord.row, coord.col);
}

}  // namespace

std::vector<ParamCoord> subset_selection(const ModulationMatrix& mod, double fraction, BlendSpec::Selection selection,
                                         std::uint64_t seed) {
    if (fraction < 0.0 || fraction > 1.0) throw ValueError("subset fraction must lie in [0,1]");

    std::vector<ParamCoord> coords = nonzero_coords(mod);
    const std::size_t take = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(coords.size())));
    if (selection == BlendSpec::Selection::MagnitudeDescending) {
        std::stable_sort(coords.begin(), coords.end(), [&mod](const ParamCoord& a, const ParamCoord& b) {
            return std::abs(delta_at(mod, a)) > std::abs(delta_at(mod, b));
        });
    } else {
        Rng rng(seed);
        rng.shuffle(coords);
    }
    coords.resize(take);
    return coords;
}

Network blend(const Network& base, const ModulationMatrix& mod, const BlendSpec& spec) {
    if (base.spec != mod.spec) throw ShapeError("base network spec does not match modulation matrix");
    if (payload_checksum(base) != mod.source_checksum_a)
        throw ProvenanceError("base network is not the A network this modulation matrix was diffed from");
    if (spec.parameter < 0.0 || spec.parameter > 1.0) throw ValueError("blend parameter must lie in [0,1]");

    Network out = base;

    // Exact B value for a fully switched coordinate.
    auto switched_value = [&](std::size_t layer, bool is_bias, std::size_t row, std::size_t col) {
        double a = is_bias ? base.biases[layer][row] : base.weights[layer](row, col);
        double d = is_bias ? mod.delta_biases[layer][row] : mod.delta_weights[layer](row, col);
        for (const auto& fix : mod.endpoint_fixes)
            if (fix.layer == layer && fix.is_bias == is_bias && fix.row == row && fix.col == col) return fix.value;
        return a + d;
    };

    if (spec.mode == BlendSpec::Mode::Linear) {
        const double alpha = spec.parameter;
        if (alpha == 0.0) return out;
        for (std::size_t l = 0; l < out.weights.size(); ++l) {
            if (alpha == 1.0) {
                for (std::size_t r = 0; r < out.weights[l].rows; ++r)
                    for (std::size_t c = 0; c < out.weights[l].cols; ++c)
                        out.weights[l](r, c) = switched_value(l, false, r, c);
                for (std::size_t r = 0; r < out.biases[l].size(); ++r)
                    out.biases[l][r] = switched_value(l, true, r, 0);
            } else {
                double* w = out.weights[l].data.data();
                const double* dw = mod.delta_weights[l].data.data();
                for (std::size_t k = 0; k < out.weights[l].size(); ++k) w[k] = w[k] + alpha * dw[k];
                for (std::size_t r = 0; r < out.biases[l].size(); ++r)
                    out.biases[l][r] = out.biases[l][r] + alpha * mod.delta_biases[l][r];
            }
        }
        return out;
    }

    for (const ParamCoord& coord : subset_selection(mod, spec.parameter, spec.selection, spec.selection_seed)) {
        double v = switched_value(coord.layer, coord.is_bias, coord.row, coord.col);
        if (coord.is_bias)
            out.biases[coord.layer][coord.row] = v;
        else
            out.weights[coord.layer](coord.row, coord.col) = v;
    }
    return out;
}

std::vector<SweepPoint> sweep(const Network& net_a, const Network& net_b, const Dataset& data,
                              const std::vector<LabelCodec>& codecs, const BlendSpec& mode, std::size_t steps) {
    if (steps < 2) throw ValueError("sweep needs at least 2 steps");

    const ModulationMatrix mod = diff(net_a, net_b);
    std::vector<SweepPoint> points;
    points.reserve(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        double t = static_cast<double>(k) / static_cast<double>(steps - 1);
        BlendSpec at = mode;
        at.parameter = t;
        Network blended = blend(net_a, mod, at);
        points.push_back({t, evaluate(blended, data, codecs)});
    }
    return points;
}

}  // namespace modnet
