#pragma once

#include <filesystem>
#include <span>
#include <string>

#include <json.hpp>

#include "qrc/forecast.hpp"
#include "qrc/mc_bench.hpp"
#include "qrc/readout.hpp"

namespace qrc {

// Output writers. Numbers are written in shortest round-trip form so files are
// byte-identical across re-runs.

/// "t,actual,predicted,residual"
void write_records_csv(const std::filesystem::path& path, std::span<const ForecastRecord> records);

/// "t,actual,predicted"
void write_predictions_csv(const std::filesystem::path& path, std::span<const ForecastRecord> records);

/// "sequence_index,loops,edges,edge_density,mc_mean,mc_stderr", one row per topology.
void write_mc_csv(const std::filesystem::path& path, const SweepResult& sweep);

/// Full r_tau^2 curves per topology plus the argmax and `meta`.
[[nodiscard]] nlohmann::json mc_curves_json(const SweepResult& sweep, const nlohmann::json& meta);

/// "date,actual_vix,predicted_vix,actual_dvix,predicted_dvix,residual"
void write_forecasts_csv(const std::filesystem::path& path, std::span<const MarketForecast> forecasts);

/// "date,actual_vix,predicted_vix,actual_dvix,predicted_dvix,scored"; the scored
/// column marks rows after burn-in.
void write_plot_csv(const std::filesystem::path& path, const ForecastRun& run);

void write_json(const std::filesystem::path& path, const nlohmann::json& doc);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace qrc
