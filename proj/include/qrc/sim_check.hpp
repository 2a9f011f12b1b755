#pragma once

#include <cstdint>
#include <vector>

namespace qrc {

/// Statistical self-test of the circuit simulator.
struct SimCheckReport {
    int shots = 0;
    int seeds = 0;
    std::vector<double> angles;
    /// Noiseless check: share of (angle, seed) cells with |s - cos theta| <= 4 / sqrt(shots).
    double cell_pass_fraction = 0.0;
    /// Readout check with symmetric flip probability p: per angle, the seed-mean
    /// spin against (1 - 2p) cos theta, in units of its standard error.
    double flip_probability = 0.0;
    std::vector<double> flip_z_scores;
    bool passed = false;
};

/// Angles 0, pi/6, ..., pi; `seeds` independent runs per angle. Passes when at
/// least 95% of cells are inside tolerance and every |z| <= 3 (constant spins,
/// which have zero spread, must match exactly).
[[nodiscard]] SimCheckReport run_sim_check(int shots, int seeds, std::uint64_t base_seed,
                                           double flip_probability = 0.05);

}  // namespace qrc
