#include <gtest/gtest.h>

#include <cmath>

#include "qrc/forecast.hpp"
#include "synthetic_market.hpp"

namespace qrc {
namespace {

ForecastConfig fast_config() {
    ForecastConfig cfg;
    cfg.reservoir.shots = 2048;
    return cfg;
}

TEST(Forecast, ConstantSeriesPredictsNoChange) {
    MarketSeries s;
    s.dates = testing::consecutive_dates(60);
    s.spx.assign(60, 3000.0);
    s.vix.assign(60, 20.0);
    const auto run = run_forecast(s, fast_config());
    ASSERT_FALSE(run.forecasts.empty());
    for (const auto& f : run.forecasts) {
        EXPECT_EQ(f.delta.actual, 0.0);
        EXPECT_NEAR(f.delta.predicted, 0.0, 1e-12);
        EXPECT_NEAR(f.predicted_vix, 20.0, 1e-12);
    }
}

TEST(Forecast, LayoutAndResidualIdentity) {
    const auto s = testing::garch_market(300, 4);
    const auto run = run_forecast(s, fast_config());
    // First forecast is issued on day n + 1 = 7 for day 8.
    ASSERT_EQ(run.forecasts.size(), 300u - 1 - 7);
    EXPECT_EQ(run.forecasts.front().date, s.dates[8]);
    EXPECT_EQ(run.forecasts.back().date, s.dates.back());
    EXPECT_EQ(run.burn_in, run.forecasts.size() / 3);
    EXPECT_EQ(run.summary.scored, run.forecasts.size() - run.burn_in);
    for (std::size_t i = 0; i < run.forecasts.size(); ++i) {
        const auto& f = run.forecasts[i];
        const std::size_t t = i + 7;
        EXPECT_EQ(f.delta.t, t);
        EXPECT_DOUBLE_EQ(f.delta.actual, s.vix[t + 1] - s.vix[t]);
        EXPECT_DOUBLE_EQ(f.delta.residual, f.delta.actual - f.delta.predicted);
        EXPECT_DOUBLE_EQ(f.actual_vix, s.vix[t + 1]);
        EXPECT_DOUBLE_EQ(f.predicted_vix, s.vix[t] + f.delta.predicted);
    }
}

TEST(Forecast, DeterministicForSeed) {
    const auto s = testing::garch_market(200, 5);
    const auto a = run_forecast(s, fast_config());
    const auto b = run_forecast(s, fast_config());
    for (std::size_t i = 0; i < a.forecasts.size(); ++i) {
        ASSERT_EQ(a.forecasts[i].delta.predicted, b.forecasts[i].delta.predicted);
    }
}

TEST(Forecast, FutureDataDoesNotLeakIntoPredictions) {
    auto s = testing::garch_market(200, 6);
    const auto base = run_forecast(s, fast_config());
    const std::size_t k = 150;
    s.spx[k] *= 1.05;
    s.vix[k] *= 1.2;
    const auto probed = run_forecast(s, fast_config());
    // Forecast index i is made on day i + 7 from data up to that day.
    for (std::size_t i = 0; i + 7 < k; ++i) {
        ASSERT_EQ(base.forecasts[i].delta.predicted, probed.forecasts[i].delta.predicted) << i;
    }
    EXPECT_NE(base.forecasts[k - 7].delta.predicted, probed.forecasts[k - 7].delta.predicted);
}

TEST(Forecast, SyntheticLeverageIsForecastable) {
    const auto s = testing::garch_market(3000, 7);
    const auto run = run_forecast(s, fast_config());
    ASSERT_TRUE(run.summary.correlation);
    EXPECT_GT(*run.summary.correlation, 0.0);
    EXPECT_LT(std::abs(run.summary.residual_mean), 0.1 * run.summary.residual_std);
}

TEST(Forecast, TransformedInputs) {
    const std::vector<double> spx{100, 101, 99, 99};
    const auto u = transformed_inputs(spx, AsymTransformParams{});
    ASSERT_EQ(u.size(), 4u);
    EXPECT_TRUE(std::isnan(u[0]));
    EXPECT_TRUE(std::isnan(u[1]));
    const double dr = std::log(99.0 / 101.0) - std::log(101.0 / 100.0);
    EXPECT_DOUBLE_EQ(u[2], asym_transform(dr, AsymTransformParams{}));
    EXPECT_DOUBLE_EQ(u[3], asym_transform(-std::log(99.0 / 101.0), AsymTransformParams{}));
}

TEST(Forecast, RejectsShortSeries) {
    const auto s = testing::garch_market(10, 1);
    EXPECT_THROW((void)run_forecast(s, fast_config()), std::invalid_argument);
}

}  // namespace
}  // namespace qrc
