#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qrc/random.hpp"

namespace qrc {

/// When the Gaussian angle jitter is drawn.
enum class JitterMode {
    per_step,  ///< one draw per qubit per circuit execution, shared by all shots (slow drift)
    per_shot,  ///< fresh draw for every shot
};

/// Hardware noise applied inside one circuit execution.
struct NoiseModel {
    double angle_jitter_sigma = 0.0;  ///< std. dev. of the rotation-angle perturbation, radians
    double p_flip_0to1 = 0.0;         ///< readout error: measured 1 when the qubit was 0
    double p_flip_1to0 = 0.0;         ///< readout error: measured 0 when the qubit was 1
    double crosstalk_kappa = 0.0;     ///< fraction of each register neighbor's angle leaked in
    JitterMode jitter_mode = JitterMode::per_step;

    /// All-zero noise.
    static NoiseModel none() { return {}; }

    /// Plausible superconducting-device defaults: sigma 0.02 rad, flips 0.02 / 0.03,
    /// crosstalk 0.01.
    static NoiseModel rochester_like() { return {0.02, 0.02, 0.03, 0.01, JitterMode::per_step}; }

    /// Throws std::invalid_argument naming the first bad field.
    void validate() const;

    [[nodiscard]] bool is_noiseless() const noexcept {
        return angle_jitter_sigma == 0.0 && p_flip_0to1 == 0.0 && p_flip_1to0 == 0.0 &&
               crosstalk_kappa == 0.0;
    }
};

/// Looks up a named preset ("none", "rochester-like"); throws std::invalid_argument otherwise.
[[nodiscard]] NoiseModel noise_preset(const std::string& name);

[[nodiscard]] std::string to_string(JitterMode mode);
[[nodiscard]] JitterMode jitter_mode_from_string(const std::string& name);

/// Per-qubit RY rotation angles, radians.
struct AngleVector {
    std::vector<double> theta;
    [[nodiscard]] std::size_t size() const noexcept { return theta.size(); }
};

/// Per-qubit average spin (n0 - n1) / shots, each in [-1, 1].
struct SpinVector {
    std::vector<double> s;
    [[nodiscard]] std::size_t size() const noexcept { return s.size(); }
};

/// Expected <Z> of RY(theta)|0>, i.e. cos(theta).
[[nodiscard]] double ideal_spin(double theta) noexcept;

/**
 * Inverse CDF of Binomial(trials, p): the smallest k with P(X <= k) > u.
 *
 * With u ~ Uniform[0, 1) the result is an exact Binomial draw. Using one
 * uniform per draw makes the count monotone in p for a fixed u, so two
 * trajectories sharing a random stream stay coupled.
 */
[[nodiscard]] int binomial_quantile(int trials, double p, double u);

/**
 * Executes one time step of the reservoir circuit: RY(theta_m) on each qubit of
 * |0...0>, noise, then `shots` measurements in the Z basis.
 *
 * The effective angle is theta_m + eta_m + kappa * (theta_{m-1} + theta_{m+1}),
 * with absent register neighbors dropped and eta_m ~ Normal(0, sigma^2). The
 * circuit has only single-qubit gates, so the state is a product state and
 * each qubit is sampled independently: excitation probability
 * sin^2(theta'/2), followed by asymmetric readout flips.
 *
 * In per-step jitter mode the shots of one qubit are i.i.d., so the count of
 * measured ones is drawn directly as Binomial(shots, p_measured). Random draws
 * per step: the n jitter normals (if sigma > 0) in qubit order, then n uniforms.
 *
 * Throws std::invalid_argument when shots < 1, an angle is non-finite, or the
 * noise model is invalid.
 */
[[nodiscard]] SpinVector run_step(const AngleVector& angles, const NoiseModel& noise, int shots,
                                  RandomStream& rng);

}  // namespace qrc
