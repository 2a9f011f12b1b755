#pragma once

#include <span>
#include <vector>

#include "qrc/quantum_layer.hpp"
#include "qrc/topology.hpp"

namespace qrc {

/// Parameters of the asymmetric return transform u = 1 - exp(-(a0 + a1 * I * dr)).
struct AsymTransformParams {
    double a0 = 0.5;
    double a1 = -40.0;  ///< negative values make falling returns push u up

    void validate() const;
};

/// Mixing weights of the angle encoding. Unprimed weights apply to qubits with
/// a non-empty feedback set, primed weights to loop-free qubits.
struct EncodingWeights {
    double alpha = 0.3;
    double beta = 0.3;
    double gamma = 0.4;
    double alpha_prime = 0.6;
    double gamma_prime = 0.4;

    /// Requires all weights >= 0, alpha+beta+gamma <= 1, alpha'+gamma' <= 1.
    void validate() const;
};

/// r_t = ln(p_t / p_{t-1}). Output is one shorter than the input.
/// Throws InvalidData (with the index) on a non-positive or non-finite price,
/// std::invalid_argument on fewer than two prices.
[[nodiscard]] std::vector<double> log_returns(std::span<const double> prices);

/// x_t - x_{t-1}; throws std::invalid_argument when fewer than two values.
[[nodiscard]] std::vector<double> delta(std::span<const double> series);

/// Asymmetric squashing of a return difference into [0, 1]. The indicator is 1
/// only for dr < 0, so every dr >= 0 maps to 1 - exp(-a0).
[[nodiscard]] double asym_transform(double dr, const AsymTransformParams& p) noexcept;

/**
 * Folds the current inputs, the previous spins and the previous squashed error
 * into rotation angles.
 *
 * With s_hat = (s + 1) / 2 and f_m the mean of s_hat over feedback_set(m):
 *   theta_m = pi/2 (alpha u_m + beta f_m + gamma e)   when the set is non-empty
 *   theta_m = pi/2 (alpha' u_m + gamma' e)            for loop-free qubits
 * clamped to [0, pi/2].
 *
 * Throws std::invalid_argument when u_window or prev_spins do not match
 * topo.n_qubits().
 */
[[nodiscard]] AngleVector encode_angles(std::span<const double> u_window, const SpinVector& prev_spins,
                                        double prev_error, const ReservoirTopology& topo,
                                        const EncodingWeights& w);

/// Number of trailing prices one forecast step reads: n lagged inputs need
/// n return differences, n + 1 log returns and n + 2 prices.
[[nodiscard]] constexpr int prices_per_window(int n_qubits) noexcept { return n_qubits + 2; }

}  // namespace qrc
