#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qrc/encoding.hpp"
#include "qrc/market.hpp"
#include "qrc/readout.hpp"
#include "qrc/reservoir.hpp"

namespace qrc {

struct ForecastConfig {
    ReservoirSpec reservoir;
    AsymTransformParams transform;
    ReadoutConfig readout;
    FeedbackConfig feedback;
    double burn_in_fraction = 1.0 / 3.0;
    std::uint64_t seed = 1;
    /// Starting spins of the register; all +1 when unset.
    std::optional<SpinVector> initial_spins;
};

/// One day's forecast of the next day's VIX.
struct MarketForecast {
    Date date;             ///< date of the forecast target (day t + 1)
    ForecastRecord delta;  ///< actual / predicted / residual of Delta VIX(t + 1)
    double actual_vix = 0.0;
    double predicted_vix = 0.0;  ///< VIX(t) + predicted Delta VIX
};

struct ForecastSummary {
    std::size_t records = 0;
    std::size_t scored = 0;  ///< records after burn-in
    double mse = 0.0;
    double residual_mean = 0.0;
    double residual_std = 0.0;
    /// corr(predicted Delta VIX, actual Delta VIX); nullopt if either is constant.
    std::optional<double> correlation;
};

struct ForecastRun {
    std::vector<MarketForecast> forecasts;
    std::size_t burn_in = 0;
    ForecastSummary summary;
};

/**
 * Transformed reservoir input per day: u(t) = asym_transform(Delta r_t) with
 * r_t the SPX log return. Days 0 and 1 have no return difference and hold NaN.
 */
[[nodiscard]] std::vector<double> transformed_inputs(const std::vector<double>& spx, const AsymTransformParams& p);

/**
 * Runs the daily loop over the series. On day t qubit m receives u(t - m);
 * the reservoir also gets its previous spins and the previous squashed
 * residual, and the readout predicts Delta VIX(t + 1) = VIX(t + 1) - VIX(t),
 * then learns from it. The first forecast is made on day n + 1 (the earliest
 * day with n return differences). The leading burn_in_fraction of forecasts
 * is left out of the summary; the reservoir and readout still run through it.
 *
 * Throws std::invalid_argument when the series leaves fewer than three
 * scored forecasts.
 */
[[nodiscard]] ForecastRun run_forecast(const MarketSeries& series, const ForecastConfig& cfg);

}  // namespace qrc
