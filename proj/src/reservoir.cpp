#include "qrc/reservoir.hpp"

#include <stdexcept>

namespace qrc {

Reservoir::Reservoir(ReservoirSpec spec, std::uint64_t seed)
    : spec_(std::move(spec)), rng_(seed),
      spins_{std::vector<double>(static_cast<std::size_t>(spec_.topology.n_qubits()), 1.0)} {
    spec_.weights.validate();
    spec_.noise.validate();
    if (spec_.shots < 1) throw std::invalid_argument("reservoir: shots must be >= 1");
}

const SpinVector& Reservoir::step(std::span<const double> u_window, double error) {
    angles_ = encode_angles(u_window, spins_, error, spec_.topology, spec_.weights);
    spins_ = run_step(angles_, spec_.noise, spec_.shots, rng_);
    return spins_;
}

void Reservoir::set_spins(SpinVector spins) {
    if (spins.size() != spins_.size()) throw std::invalid_argument("reservoir: spin vector size mismatch");
    spins_ = std::move(spins);
}

}  // namespace qrc
