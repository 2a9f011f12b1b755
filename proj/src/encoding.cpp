#include "qrc/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "qrc/errors.hpp"

namespace qrc {

void AsymTransformParams::validate() const {
    if (!std::isfinite(a0)) throw std::invalid_argument("transform.a0 must be finite");
    if (!std::isfinite(a1)) throw std::invalid_argument("transform.a1 must be finite");
}

void EncodingWeights::validate() const {
    const double weights[] = {alpha, beta, gamma, alpha_prime, gamma_prime};
    for (double v : weights) {
        if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("encoding weights must be finite and >= 0");
    }
    // Small slack so decimal inputs like 0.3 + 0.3 + 0.4 are accepted.
    constexpr double slack = 1e-12;
    if (alpha + beta + gamma > 1.0 + slack) {
        throw std::invalid_argument("encoding: alpha + beta + gamma must not exceed 1");
    }
    if (alpha_prime + gamma_prime > 1.0 + slack) {
        throw std::invalid_argument("encoding: alpha_prime + gamma_prime must not exceed 1");
    }
}

std::vector<double> log_returns(std::span<const double> prices) {
    if (prices.size() < 2) throw std::invalid_argument("log_returns: need at least two prices");
    for (std::size_t i = 0; i < prices.size(); ++i) {
        if (!(prices[i] > 0.0) || !std::isfinite(prices[i])) {
            throw InvalidData(fmt::format("log_returns: price at index {} is not positive ({})", i, prices[i]), i);
        }
    }
    std::vector<double> out(prices.size() - 1);
    for (std::size_t i = 1; i < prices.size(); ++i) out[i - 1] = std::log(prices[i] / prices[i - 1]);
    return out;
}

std::vector<double> delta(std::span<const double> series) {
    if (series.size() < 2) throw std::invalid_argument("delta: need at least two values");
    std::vector<double> out(series.size() - 1);
    for (std::size_t i = 1; i < series.size(); ++i) out[i - 1] = series[i] - series[i - 1];
    return out;
}

double asym_transform(double dr, const AsymTransformParams& p) noexcept {
    const double indicator = dr < 0.0 ? 1.0 : 0.0;
    const double u = 1.0 - std::exp(-(p.a0 + p.a1 * indicator * dr));
    return std::clamp(u, 0.0, 1.0);
}

AngleVector encode_angles(std::span<const double> u_window, const SpinVector& prev_spins, double prev_error,
                          const ReservoirTopology& topo, const EncodingWeights& w) {
    const auto n = static_cast<std::size_t>(topo.n_qubits());
    if (u_window.size() != n || prev_spins.size() != n) {
        throw std::invalid_argument(fmt::format("encode_angles: topology has {} qubits but got {} inputs and {} spins",
                                                n, u_window.size(), prev_spins.size()));
    }

    constexpr double half_pi = std::numbers::pi / 2.0;
    AngleVector angles{std::vector<double>(n)};
    for (std::size_t m = 0; m < n; ++m) {
        const auto& sources = topo.feedback_set(static_cast<int>(m));
        double mix = 0.0;
        if (sources.empty()) {
            mix = w.alpha_prime * u_window[m] + w.gamma_prime * prev_error;
        } else {
            double feedback = 0.0;
            for (int j : sources) feedback += 0.5 * (prev_spins.s[static_cast<std::size_t>(j)] + 1.0);
            feedback /= static_cast<double>(sources.size());
            mix = w.alpha * u_window[m] + w.beta * feedback + w.gamma * prev_error;
        }
        angles.theta[m] = std::clamp(half_pi * mix, 0.0, half_pi);
    }
    return angles;
}

}  // namespace qrc
