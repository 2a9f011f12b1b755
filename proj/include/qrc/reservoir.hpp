#pragma once

#include <cstdint>
#include <span>

#include "qrc/encoding.hpp"
#include "qrc/quantum_layer.hpp"
#include "qrc/random.hpp"
#include "qrc/topology.hpp"

namespace qrc {

/// Everything needed to build a Reservoir apart from its random seed.
struct ReservoirSpec {
    ReservoirTopology topology = ReservoirTopology::with_self_loops(6, 5);
    EncodingWeights weights;
    NoiseModel noise = NoiseModel::rochester_like();
    int shots = 8192;
};

/**
 * Stateful encode -> circuit loop. Each step() encodes the inputs with the
 * spins of the previous step, runs the circuit and keeps the new spins.
 *
 * The register starts in |0...0>, so the initial spins are all +1 unless
 * overridden with set_spins().
 */
class Reservoir {
public:
    Reservoir(ReservoirSpec spec, std::uint64_t seed);

    /// One time step; u_window[m] is the input of qubit m, error the squashed
    /// residual of the previous forecast (0 when there is none).
    const SpinVector& step(std::span<const double> u_window, double error);

    [[nodiscard]] const SpinVector& spins() const noexcept { return spins_; }
    void set_spins(SpinVector spins);

    [[nodiscard]] const AngleVector& last_angles() const noexcept { return angles_; }
    [[nodiscard]] const ReservoirSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] int n_qubits() const noexcept { return spec_.topology.n_qubits(); }

private:
    ReservoirSpec spec_;
    RandomStream rng_;
    SpinVector spins_;
    AngleVector angles_;
};

}  // namespace qrc
