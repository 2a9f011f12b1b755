#include "qrc/cli.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "qrc/config.hpp"
#include "qrc/errors.hpp"
#include "qrc/forecast.hpp"
#include "qrc/io.hpp"
#include "qrc/market.hpp"
#include "qrc/mc_bench.hpp"
#include "qrc/narma.hpp"
#include "qrc/sim_check.hpp"

namespace qrc::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
    std::string config_path;
    std::string out_dir = "qrc-out";
    std::optional<std::uint64_t> seed;
    std::optional<int> qubits;
    std::optional<int> seeds;
    std::optional<int> shots;
    std::optional<std::string> noise_preset;
    std::optional<std::size_t> length;
    std::optional<std::string> data;
    int jobs = 0;
};

RunConfig resolve_config(const Options& opt) {
    RunConfig cfg = opt.config_path.empty() ? RunConfig{} : load_config(opt.config_path);
    if (opt.qubits) cfg.n_qubits = *opt.qubits;
    if (opt.seed) cfg.seed = *opt.seed;
    if (opt.seeds) cfg.mc_seeds = *opt.seeds;
    if (opt.shots) cfg.shots = *opt.shots;
    if (opt.noise_preset) cfg.apply_noise_preset(*opt.noise_preset);
    if (opt.length) cfg.narma_length = *opt.length;
    if (opt.data) cfg.data_path = *opt.data;
    cfg.validate();
    return cfg;
}

void write_manifest(const fs::path& dir, const std::string& command, const RunConfig& cfg) {
    write_text(dir / "manifest.ini",
               fmt::format("; qrc {} -- re-run with: qrc {} --config manifest.ini\n{}", command, command, to_ini(cfg)));
}

std::string require_data(const RunConfig& cfg) {
    if (cfg.data_path.empty()) throw ConfigError("forecast.data", "no market data file given (use --data)");
    return cfg.data_path;
}

nlohmann::json optional_number(const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

int cmd_mc_sweep(const RunConfig& cfg, const fs::path& dir, int jobs, std::ostream& out) {
    const auto result = sweep(cfg.n_qubits, cfg.sweep_spec(), cfg.mc_config(), cfg.mc_seeds, cfg.seed, jobs);
    write_mc_csv(dir / "mc_results.csv", result);
    write_json(dir / "mc_curves.json", mc_curves_json(result, {{"config", to_json(cfg)}}));

    fmt::print(out, "{:>5} {:>6} {:>6} {:>8} {:>9} {:>9}\n", "index", "loops", "edges", "density", "mc", "stderr");
    for (const auto& r : result.results) {
        fmt::print(out, "{:>5} {:>6} {:>6} {:>8.4f} {:>9.4f} {:>9.4f}\n", r.topology.sequence_index().value_or(-1),
                   r.topology.loop_count(), r.topology.edges().size(), edge_density(r.topology), r.mc, r.mc_stderr);
    }
    fmt::print(out, "argmax: index {} ({})\n", result.argmax, result.results[result.argmax].topology.label());
    return kSuccess;
}

int cmd_narma(const RunConfig& cfg, const fs::path& dir, std::ostream& out) {
    const auto report = run_narma_benchmark(cfg.narma_config());
    write_predictions_csv(dir / "narma_predictions.csv", report.records);
    write_json(dir / "narma_metrics.json", {
                                               {"nmse", report.nmse},
                                               {"nmse_definition", "sum((actual - predicted)^2) / sum(actual^2)"},
                                               {"records", report.records.size()},
                                               {"burn_in", report.burn_in},
                                               {"config", to_json(cfg)},
                                           });
    fmt::print(out, "NARMA5 length {}: NMSE = {:.6g} over {} scored steps\n", cfg.narma_length, report.nmse,
               report.records.size() - report.burn_in);
    return kSuccess;
}

int cmd_forecast(const RunConfig& cfg, const fs::path& dir, std::ostream& out) {
    const auto series = load_market_csv(require_data(cfg));
    const auto run = run_forecast(series, cfg.forecast_config());

    std::vector<ForecastRecord> records;
    records.reserve(run.forecasts.size());
    for (const auto& f : run.forecasts) records.push_back(f.delta);
    write_forecasts_csv(dir / "forecasts.csv", run.forecasts);
    write_records_csv(dir / "records.csv", records);
    write_plot_csv(dir / "plot_data.csv", run);
    const auto& s = run.summary;
    write_json(dir / "forecast_metrics.json", {
                                                  {"records", s.records},
                                                  {"scored", s.scored},
                                                  {"burn_in", run.burn_in},
                                                  {"mse", s.mse},
                                                  {"residual_mean", s.residual_mean},
                                                  {"residual_std", s.residual_std},
                                                  {"correlation_dvix", optional_number(s.correlation)},
                                                  {"target", "delta_vix"},
                                                  {"config", to_json(cfg)},
                                              });
    fmt::print(out, "forecast: {} records ({} scored), MSE {:.6g}, residual mean {:.4g} std {:.4g}, corr {}\n",
               s.records, s.scored, s.mse, s.residual_mean, s.residual_std,
               s.correlation ? fmt::format("{:.4f}", *s.correlation) : std::string("undefined"));
    return kSuccess;
}

int cmd_diagnostics(const RunConfig& cfg, const fs::path& dir, std::ostream& out) {
    const auto series = load_market_csv(require_data(cfg));
    const auto d = diagnostics(series);
    write_json(dir / "diagnostics.json", {
                                             {"rows", d.rows},
                                             {"return_correlation", optional_number(d.return_correlation)},
                                             {"mean_vix", d.mean_vix},
                                             {"max_vix", d.max_vix},
                                             {"max_vix_date", d.rows ? format_date(d.max_vix_date) : ""},
                                             {"vix_positive", d.vix_positive},
                                             {"spx_positive", d.spx_positive},
                                             {"config", to_json(cfg)},
                                         });
    fmt::print(out, "rows: {}\n", d.rows);
    fmt::print(out, "corr(dSPX%, dVIX%): {}\n",
               d.return_correlation ? fmt::format("{:.4f}", *d.return_correlation)
                                    : std::string("undefined (zero variance)"));
    fmt::print(out, "mean VIX: {:.4f}\n", d.mean_vix);
    if (d.rows) fmt::print(out, "max VIX: {} on {}\n", d.max_vix, format_date(d.max_vix_date));
    fmt::print(out, "VIX always positive: {}\n", d.vix_positive ? "yes" : "no");
    return kSuccess;
}

int cmd_sim_check(const RunConfig& cfg, const fs::path& dir, std::ostream& out) {
    const auto report = run_sim_check(cfg.shots, std::max(cfg.mc_seeds, 50), cfg.seed);
    write_json(dir / "sim_check.json", {
                                           {"shots", report.shots},
                                           {"seeds", report.seeds},
                                           {"angles", report.angles},
                                           {"cell_pass_fraction", report.cell_pass_fraction},
                                           {"flip_probability", report.flip_probability},
                                           {"flip_z_scores", report.flip_z_scores},
                                           {"passed", report.passed},
                                           {"config", to_json(cfg)},
                                       });
    fmt::print(out, "noiseless cells within 4/sqrt(shots): {:.1f}%\n", 100.0 * report.cell_pass_fraction);
    fmt::print(out, "readout flip scaling z-scores:");
    for (double z : report.flip_z_scores) fmt::print(out, " {:.2f}", z);
    fmt::print(out, "\nsim-check: {}\n", report.passed ? "PASS" : "FAIL");
    return report.passed ? kSuccess : kRuntimeFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Noisy qubit reservoir computer: memory capacity, NARMA5 and volatility forecasting", "qrc"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&opt](CLI::App* cmd) {
        cmd->add_option("--config", opt.config_path, "INI run configuration");
        cmd->add_option("--out", opt.out_dir, "Output directory")->capture_default_str();
        cmd->add_option("--seed", opt.seed, "Random seed override");
        cmd->add_option("--qubits", opt.qubits, "Qubit count override");
        cmd->add_option("--seeds", opt.seeds, "Number of seeds (mc-sweep)");
        cmd->add_option("--shots", opt.shots, "Shots per circuit execution");
        cmd->add_option("--noise-preset", opt.noise_preset, "Noise preset")
            ->check(CLI::IsMember({"none", "rochester-like"}));
        cmd->add_option("--jobs", opt.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    };

    auto* mc = app.add_subcommand("mc-sweep", "Memory capacity over the topology sequence");
    auto* narma = app.add_subcommand("narma", "NARMA5 one-step-ahead benchmark");
    auto* forecast = app.add_subcommand("forecast", "VIX forecast from a date,spx,vix CSV");
    auto* diag = app.add_subcommand("diagnostics", "Stylized facts of a date,spx,vix CSV");
    auto* simcheck = app.add_subcommand("sim-check", "Statistical self-test of the circuit simulator");
    for (auto* cmd : {mc, narma, forecast, diag, simcheck}) add_common(cmd);
    narma->add_option("--length", opt.length, "Series length");
    forecast->add_option("--data", opt.data, "Market CSV (date,spx,vix)");
    diag->add_option("--data", opt.data, "Market CSV (date,spx,vix)");

    if (argc <= 1) {
        err << app.help();
        return kUsageError;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsageError;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();

    RunConfig cfg;
    try {
        cfg = resolve_config(opt);
        if ((command == "forecast" || command == "diagnostics")) (void)require_data(cfg);
    } catch (const ConfigError& e) {
        err << "config error [" << e.field() << "]: " << e.what() << "\n";
        return kConfigError;
    }

    try {
        const fs::path dir(opt.out_dir);
        fs::create_directories(dir);
        write_manifest(dir, command, cfg);
        if (chosen == mc) return cmd_mc_sweep(cfg, dir, opt.jobs, out);
        if (chosen == narma) return cmd_narma(cfg, dir, out);
        if (chosen == forecast) return cmd_forecast(cfg, dir, out);
        if (chosen == diag) return cmd_diagnostics(cfg, dir, out);
        return cmd_sim_check(cfg, dir, out);
    } catch (const ParseError& e) {
        err << "error [parse, line " << e.line() << "]: " << e.what() << "\n";
    } catch (const InvalidData& e) {
        err << "error [invalid-data]: " << e.what() << "\n";
    } catch (const GenerationDiverged& e) {
        err << "error [generation-diverged]: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error [invalid-argument]: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error [runtime]: " << e.what() << "\n";
    }
    return kRuntimeFailure;
}

}  // namespace qrc::cli
