#include "qrc/io.hpp"

#include <fstream>
#include <stdexcept>

#include <fmt/format.h>

#include "qrc/topology.hpp"

namespace qrc {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
    return out;
}

}  // namespace

void write_records_csv(const std::filesystem::path& path, std::span<const ForecastRecord> records) {
    auto out = open_output(path);
    out << "t,actual,predicted,residual\n";
    for (const auto& r : records) out << fmt::format("{},{},{},{}\n", r.t, r.actual, r.predicted, r.residual);
}

void write_predictions_csv(const std::filesystem::path& path, std::span<const ForecastRecord> records) {
    auto out = open_output(path);
    out << "t,actual,predicted\n";
    for (const auto& r : records) out << fmt::format("{},{},{}\n", r.t, r.actual, r.predicted);
}

void write_mc_csv(const std::filesystem::path& path, const SweepResult& sweep) {
    auto out = open_output(path);
    out << "sequence_index,loops,edges,edge_density,mc_mean,mc_stderr\n";
    for (std::size_t i = 0; i < sweep.results.size(); ++i) {
        const auto& r = sweep.results[i];
        out << fmt::format("{},{},{},{},{},{}\n", r.topology.sequence_index().value_or(static_cast<int>(i)),
                           r.topology.loop_count(), r.topology.edges().size(), edge_density(r.topology), r.mc,
                           r.mc_stderr);
    }
}

nlohmann::json mc_curves_json(const SweepResult& sweep, const nlohmann::json& meta) {
    nlohmann::json topologies = nlohmann::json::array();
    for (std::size_t i = 0; i < sweep.results.size(); ++i) {
        const auto& r = sweep.results[i];
        topologies.push_back({
            {"sequence_index", r.topology.sequence_index().value_or(static_cast<int>(i))},
            {"topology", r.topology},
            {"edge_density", edge_density(r.topology)},
            {"mc", r.mc},
            {"mc_stderr", r.mc_stderr},
            {"seeds", r.seeds},
            {"seed_mc", r.seed_mc},
            {"r_sq", r.r_sq},
        });
    }
    return {{"argmax", sweep.argmax}, {"topologies", std::move(topologies)}, {"meta", meta}};
}

void write_forecasts_csv(const std::filesystem::path& path, std::span<const MarketForecast> forecasts) {
    auto out = open_output(path);
    out << "date,actual_vix,predicted_vix,actual_dvix,predicted_dvix,residual\n";
    for (const auto& f : forecasts) {
        out << fmt::format("{},{},{},{},{},{}\n", format_date(f.date), f.actual_vix, f.predicted_vix, f.delta.actual,
                           f.delta.predicted, f.delta.residual);
    }
}

void write_plot_csv(const std::filesystem::path& path, const ForecastRun& run) {
    auto out = open_output(path);
    out << "date,actual_vix,predicted_vix,actual_dvix,predicted_dvix,scored\n";
    for (std::size_t i = 0; i < run.forecasts.size(); ++i) {
        const auto& f = run.forecasts[i];
        out << fmt::format("{},{},{},{},{},{}\n", format_date(f.date), f.actual_vix, f.predicted_vix, f.delta.actual,
                           f.delta.predicted, i >= run.burn_in ? 1 : 0);
    }
}

void write_json(const std::filesystem::path& path, const nlohmann::json& doc) {
    auto out = open_output(path);
    out << doc.dump(2) << '\n';
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    auto out = open_output(path);
    out << text;
}

}  // namespace qrc
