#include "qrc/sim_check.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qrc/quantum_layer.hpp"
#include "qrc/random.hpp"
#include "qrc/stats.hpp"

namespace qrc {

SimCheckReport run_sim_check(int shots, int seeds, std::uint64_t base_seed, double flip_probability) {
    if (shots < 1 || seeds < 2) throw std::invalid_argument("sim-check: need shots >= 1 and seeds >= 2");

    SimCheckReport report;
    report.shots = shots;
    report.seeds = seeds;
    report.flip_probability = flip_probability;
    for (int k = 0; k <= 6; ++k) report.angles.push_back(k * std::numbers::pi / 6.0);

    const AngleVector angles{report.angles};
    const double tolerance = 4.0 / std::sqrt(static_cast<double>(shots));
    int inside = 0;
    int cells = 0;
    for (int seed = 0; seed < seeds; ++seed) {
        RandomStream rng(derive_seed(base_seed, {static_cast<std::uint64_t>(seed), 0}));
        const auto spins = run_step(angles, NoiseModel::none(), shots, rng);
        for (std::size_t i = 0; i < angles.size(); ++i) {
            ++cells;
            if (std::abs(spins.s[i] - ideal_spin(angles.theta[i])) <= tolerance) ++inside;
        }
    }
    report.cell_pass_fraction = static_cast<double>(inside) / cells;

    NoiseModel flips;
    flips.p_flip_0to1 = flip_probability;
    flips.p_flip_1to0 = flip_probability;
    std::vector<std::vector<double>> per_angle(angles.size());
    for (int seed = 0; seed < seeds; ++seed) {
        RandomStream rng(derive_seed(base_seed, {static_cast<std::uint64_t>(seed), 1}));
        const auto spins = run_step(angles, flips, shots, rng);
        for (std::size_t i = 0; i < angles.size(); ++i) per_angle[i].push_back(spins.s[i]);
    }
    bool flips_ok = true;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        const double expected = (1.0 - 2.0 * flip_probability) * ideal_spin(angles.theta[i]);
        const double se = sample_stddev(per_angle[i]) / std::sqrt(static_cast<double>(seeds));
        const double gap = mean(per_angle[i]) - expected;
        const double z = se > 0.0 ? gap / se : (std::abs(gap) < 1e-12 ? 0.0 : std::numeric_limits<double>::infinity());
        report.flip_z_scores.push_back(z);
        flips_ok = flips_ok && std::abs(z) <= 3.0;
    }
    report.passed = report.cell_pass_fraction >= 0.95 && flips_ok;
    return report;
}

}  // namespace qrc
