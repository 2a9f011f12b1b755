#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qrc/readout.hpp"
#include "qrc/reservoir.hpp"

namespace qrc {

/// Coefficients of the NARMA5 recurrence and its sinusoidal input.
struct NarmaParams {
    double alpha = 0.30;
    double beta = 0.05;
    double gamma = 1.50;
    double delta = 0.10;
    double mu = 0.10;
    double f0 = 2.11;
    double f1 = 3.73;
    double f2 = 4.11;
    double period = 100.0;

    void validate() const;
};

struct NarmaSeries {
    std::vector<double> input;   ///< s_t
    std::vector<double> target;  ///< v_t, with v_0..v_4 = 0
};

/**
 * s_t = mu [sin(2 pi f0 t / T) sin(2 pi f1 t / T) sin(2 pi f2 t / T) + 1]
 * v_{t+1} = alpha v_t + beta v_t (v_t + ... + v_{t-4}) + gamma s_{t-4} s_t + delta
 *
 * Throws std::invalid_argument for length < 6 and GenerationDiverged when
 * |v| exceeds 1e6 or turns non-finite.
 */
[[nodiscard]] NarmaSeries gen_narma5(std::size_t length, const NarmaParams& p);

/// sum (actual - predicted)^2 / sum actual^2.
/// Throws std::invalid_argument on empty or unequal lengths, InvalidData when
/// actual is identically zero.
[[nodiscard]] double nmse(std::span<const double> predicted, std::span<const double> actual);

struct NarmaBenchConfig {
    std::size_t length = 5000;
    NarmaParams params;
    ReservoirSpec reservoir;
    ReadoutConfig readout;
    FeedbackConfig feedback;
    double burn_in_fraction = 1.0 / 3.0;
    std::uint64_t seed = 1;
};

struct NarmaReport {
    double nmse = 0.0;
    std::size_t burn_in = 0;             ///< leading records excluded from nmse
    std::vector<ForecastRecord> records;  ///< record t forecasts v_{t+1}
};

/**
 * One-step-ahead NARMA5 forecasting with the reservoir. The input s_t is
 * mapped to [0, 1] by s / (2 mu) and qubit m sees the value m steps back
 * (0 before the series starts). The readout and error feedback run online
 * through the whole series; the first burn_in_fraction of the records is
 * excluded from the NMSE.
 */
[[nodiscard]] NarmaReport run_narma_benchmark(const NarmaBenchConfig& cfg);

}  // namespace qrc
