#include "qrc/quantum_layer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/normal.hpp>
#include <fmt/format.h>

namespace qrc {

void NoiseModel::validate() const {
    auto probability = [](double p, const char* field) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument(fmt::format("noise.{} must lie in [0, 1], got {}", field, p));
        }
    };
    auto nonnegative = [](double v, const char* field) {
        if (!std::isfinite(v) || v < 0.0) {
            throw std::invalid_argument(fmt::format("noise.{} must be finite and >= 0, got {}", field, v));
        }
    };
    nonnegative(angle_jitter_sigma, "angle_jitter_sigma");
    probability(p_flip_0to1, "p_flip_0to1");
    probability(p_flip_1to0, "p_flip_1to0");
    nonnegative(crosstalk_kappa, "crosstalk_kappa");
}

NoiseModel noise_preset(const std::string& name) {
    if (name == "none") return NoiseModel::none();
    if (name == "rochester-like") return NoiseModel::rochester_like();
    throw std::invalid_argument(fmt::format("unknown noise preset '{}'", name));
}

std::string to_string(JitterMode mode) {
    return mode == JitterMode::per_shot ? "per-shot" : "per-step";
}

JitterMode jitter_mode_from_string(const std::string& name) {
    if (name == "per-step") return JitterMode::per_step;
    if (name == "per-shot") return JitterMode::per_shot;
    throw std::invalid_argument(fmt::format("unknown jitter mode '{}'", name));
}

double ideal_spin(double theta) noexcept { return std::cos(theta); }

int binomial_quantile(int trials, double p, double u) {
    if (trials < 0) throw std::invalid_argument("binomial_quantile: negative trial count");
    if (trials == 0 || p <= 0.0) return 0;
    if (p >= 1.0) return trials;

    const boost::math::binomial_distribution<double> dist(trials, p);
    const double mean = trials * p;
    const double sd = std::sqrt(mean * (1.0 - p));
    const double z = boost::math::quantile(boost::math::normal_distribution<double>(),
                                           std::clamp(u, 1e-300, 1.0 - 1e-16));
    int k = static_cast<int>(std::clamp(std::floor(mean + z * sd), 0.0, static_cast<double>(trials)));

    double cdf = boost::math::cdf(dist, k);
    while (cdf <= u && k < trials) {
        ++k;
        cdf = boost::math::cdf(dist, k);
    }
    while (k > 0) {
        const double below = boost::math::cdf(dist, k - 1);
        if (below <= u) break;
        --k;
    }
    return k;
}

namespace {

double excitation_probability(double theta) {
    const double half = std::sin(0.5 * theta);
    return half * half;
}

}  // namespace

SpinVector run_step(const AngleVector& angles, const NoiseModel& noise, int shots, RandomStream& rng) {
    if (shots < 1) throw std::invalid_argument(fmt::format("run_step: shots must be >= 1, got {}", shots));
    noise.validate();
    const std::size_t n = angles.size();
    for (std::size_t m = 0; m < n; ++m) {
        if (!std::isfinite(angles.theta[m])) {
            throw std::invalid_argument(fmt::format("run_step: angle {} is not finite", m));
        }
    }

    std::vector<double> effective(angles.theta);
    if (noise.crosstalk_kappa > 0.0) {
        for (std::size_t m = 0; m < n; ++m) {
            double leak = 0.0;
            if (m > 0) leak += angles.theta[m - 1];
            if (m + 1 < n) leak += angles.theta[m + 1];
            effective[m] += noise.crosstalk_kappa * leak;
        }
    }

    const double p01 = noise.p_flip_0to1;
    const double p10 = noise.p_flip_1to0;
    const double sigma = noise.angle_jitter_sigma;
    SpinVector out{std::vector<double>(n)};

    if (noise.jitter_mode == JitterMode::per_step) {
        if (sigma > 0.0) {
            for (auto& theta : effective) theta += rng.normal(0.0, sigma);
        }
        for (std::size_t m = 0; m < n; ++m) {
            const double p1 = excitation_probability(effective[m]);
            const double measured_one = p1 * (1.0 - p10) + (1.0 - p1) * p01;
            const int ones = binomial_quantile(shots, measured_one, rng.uniform());
            out.s[m] = static_cast<double>(shots - 2 * ones) / shots;
        }
        return out;
    }

    for (std::size_t m = 0; m < n; ++m) {
        int ones = 0;
        for (int shot = 0; shot < shots; ++shot) {
            const double theta = sigma > 0.0 ? effective[m] + rng.normal(0.0, sigma) : effective[m];
            bool bit = rng.uniform() < excitation_probability(theta);
            const double flip = rng.uniform();
            bit = bit ? !(flip < p10) : (flip < p01);
            ones += bit ? 1 : 0;
        }
        out.s[m] = static_cast<double>(shots - 2 * ones) / shots;
    }
    return out;
}

}  // namespace qrc
