#pragma once

#include <cstdint>
#include <vector>

#include "modnet/analysis.hpp"
#include "modnet/network.hpp"

namespace modnet {

/// Entrywise weight and bias differences between two structurally
/// identical networks: delta = B - A. Switching A's coordinates to
/// A + delta recovers B.
///
/// Floating-point subtraction can round, so coordinates where
/// fl(a + delta) != b carry an endpoint fix holding b exactly; full
/// switches consult it to keep the A -> B endpoint bit-exact.
struct ModulationMatrix {
    struct EndpointFix {
        std::size_t layer = 0;
        bool is_bias = false;
        std::size_t row = 0;
        std::size_t col = 0;  ///< 0 for biases
        double value = 0.0;   ///< exact B value

        friend bool operator==(const EndpointFix& a, const EndpointFix& b) = default;
    };

    NetworkSpec spec;
    std::vector<Matrix> delta_weights;
    std::vector<std::vector<double>> delta_biases;
    std::uint64_t source_checksum_a = 0;  ///< payload hash of network A
    std::uint64_t source_checksum_b = 0;  ///< payload hash of network B
    std::vector<EndpointFix> endpoint_fixes;

    void validate() const;

    friend bool operator==(const ModulationMatrix& a, const ModulationMatrix& b) = default;
};

/// How to combine a base network with a modulation matrix.
struct BlendSpec {
    enum class Mode { Linear, Subset };
    enum class Selection { Random, MagnitudeDescending };

    Mode mode = Mode::Linear;
    double parameter = 0.0;  ///< alpha for linear, fraction for subset, in [0,1]
    Selection selection = Selection::Random;
    std::uint64_t selection_seed = 0;

    static BlendSpec linear(double alpha) { return {Mode::Linear, alpha, Selection::Random, 0}; }
    static BlendSpec subset_random(double fraction, std::uint64_t seed) {
        return {Mode::Subset, fraction, Selection::Random, seed};
    }
    static BlendSpec subset_magnitude(double fraction) {
        return {Mode::Subset, fraction, Selection::MagnitudeDescending, 0};
    }
};

/// Index of one weight or bias coordinate within a network.
struct ParamCoord {
    std::size_t layer = 0;
    bool is_bias = false;
    std::size_t row = 0;
    std::size_t col = 0;

    friend bool operator==(const ParamCoord& a, const ParamCoord& b) = default;
};

/// One thresholded weight difference, reported as (layer, row, col, delta).
struct ThresholdEntry {
    std::size_t layer = 0;
    std::size_t row = 0;
    std::size_t col = 0;
    double delta = 0.0;
};

/// Endianness-independent 64-bit hash of a network's numeric payload,
/// per connection layer: weights row-major, then biases.
std::uint64_t payload_checksum(const Network& net);

/// Hash of a modulation matrix's delta payload (same traversal order).
std::uint64_t payload_checksum(const ModulationMatrix& mod);

/// delta = netB - netA for every weight and bias. Specs must match.
ModulationMatrix diff(const Network& net_a, const Network& net_b);

/// Weight differences with |delta| >= tau, sorted by descending |delta|,
/// ties by ascending (layer, row, col). Bias deltas are not listed; the
/// (layer, row, col) schema addresses weight matrices.
std::vector<ThresholdEntry> threshold_map(const ModulationMatrix& mod, double tau);

/// Per-input-unit score laid out on a rows x cols grid:
/// score(j) = max over first-layer rows i of |delta_W0(i, j)|.
Matrix source_unit_map(const ModulationMatrix& mod, std::size_t rows, std::size_t cols);

/// The switch set for a subset blend: floor(fraction * N) of the N
/// nonzero-delta coordinates, either drawn uniformly without replacement
/// (seeded) or taken in descending |delta| order with lexicographic
/// (layer, weights-before-biases, row, col) tie-breaking.
std::vector<ParamCoord> subset_selection(const ModulationMatrix& mod, double fraction, BlendSpec::Selection selection,
                                         std::uint64_t seed);

/// Applies the modulation to a base network.
///  - linear(alpha): w <- w + alpha * delta; alpha 0 / 1 return A / B bit-exactly.
///  - subset(p): switched coordinates take B's exact value, others keep A's.
/// The base must be the A network the matrix was diffed from (checked via
/// the recorded payload checksum; ProvenanceError otherwise).
Network blend(const Network& base, const ModulationMatrix& mod, const BlendSpec& spec);

/// Evaluates blends of diff(netA, netB) at parameters 0, 1/(steps-1), ..., 1.
/// First and last points equal direct evaluations of A and B. For subset
/// mode, one selection seed is used across all steps.
std::vector<SweepPoint> sweep(const Network& net_a, const Network& net_b, const Dataset& data,
                              const std::vector<LabelCodec>& codecs, const BlendSpec& mode, std::size_t steps);

}  // namespace modnet
