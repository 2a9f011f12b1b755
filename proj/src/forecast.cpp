#include "qrc/forecast.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "qrc/stats.hpp"

namespace qrc {

std::vector<double> transformed_inputs(const std::vector<double>& spx, const AsymTransformParams& p) {
    std::vector<double> u(spx.size(), std::numeric_limits<double>::quiet_NaN());
    if (spx.size() < 3) return u;
    const auto returns = log_returns(spx);   // returns[i] belongs to day i + 1
    const auto diffs = delta(returns);       // diffs[i] belongs to day i + 2
    for (std::size_t i = 0; i < diffs.size(); ++i) u[i + 2] = asym_transform(diffs[i], p);
    return u;
}

ForecastRun run_forecast(const MarketSeries& series, const ForecastConfig& cfg) {
    series.validate();
    cfg.transform.validate();
    if (!(cfg.burn_in_fraction > 0.0 && cfg.burn_in_fraction < 1.0)) {
        throw std::invalid_argument("forecast: burn_in_fraction must lie in (0, 1)");
    }

    const int n = cfg.reservoir.topology.n_qubits();
    const std::size_t first_day = static_cast<std::size_t>(n) + 1;
    if (series.size() < first_day + 2) {
        throw std::invalid_argument(fmt::format("forecast: {} rows is too short for {} qubits", series.size(), n));
    }
    const std::size_t steps = series.size() - 1 - first_day;
    const auto burn_in = static_cast<std::size_t>(static_cast<double>(steps) * cfg.burn_in_fraction);
    if (steps < burn_in + 3) throw std::invalid_argument("forecast: insufficient data after burn-in");

    const auto u = transformed_inputs(series.spx, cfg.transform);

    Reservoir reservoir(cfg.reservoir, cfg.seed);
    if (cfg.initial_spins) reservoir.set_spins(*cfg.initial_spins);
    const auto width = static_cast<std::size_t>(n);
    auto readout = ReadoutState::initial(width + (cfg.readout.bias ? 1 : 0), cfg.readout.lambda,
                                         cfg.readout.forgetting);
    ErrorFeedback feedback(cfg.feedback.policy, burn_in, cfg.feedback.scale);

    ForecastRun run;
    run.burn_in = burn_in;
    run.forecasts.reserve(steps);
    std::vector<double> window(width);
    std::vector<double> features(readout.dim(), 1.0);
    double error = 0.0;
    for (std::size_t t = first_day; t + 1 < series.size(); ++t) {
        for (std::size_t m = 0; m < width; ++m) window[m] = u[t - m];
        const auto& spins = reservoir.step(window, error);
        std::copy(spins.s.begin(), spins.s.end(), features.begin());

        const double actual = series.vix[t + 1] - series.vix[t];
        const auto record = ForecastRecord::make(t, actual, predict(readout, features));
        readout = update(std::move(readout), features, actual);
        error = feedback.next(record.residual);
        run.forecasts.push_back({series.dates[t + 1], record, series.vix[t + 1], series.vix[t] + record.predicted});
    }

    std::vector<double> residuals;
    std::vector<double> predicted;
    std::vector<double> actual;
    std::vector<ForecastRecord> scored;
    for (std::size_t i = burn_in; i < run.forecasts.size(); ++i) {
        const auto& r = run.forecasts[i].delta;
        residuals.push_back(r.residual);
        predicted.push_back(r.predicted);
        actual.push_back(r.actual);
        scored.push_back(r);
    }
    run.summary.records = run.forecasts.size();
    run.summary.scored = scored.size();
    run.summary.mse = mse(scored);
    run.summary.residual_mean = mean(residuals);
    run.summary.residual_std = sample_stddev(residuals);
    run.summary.correlation = pearson(predicted, actual);
    return run;
}

}  // namespace qrc
