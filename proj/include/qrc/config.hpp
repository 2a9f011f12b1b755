#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "qrc/encoding.hpp"
#include "qrc/forecast.hpp"
#include "qrc/mc_bench.hpp"
#include "qrc/narma.hpp"
#include "qrc/quantum_layer.hpp"
#include "qrc/readout.hpp"

namespace qrc {

/**
 * Fully resolved run configuration.
 *
 * Stored as an INI document with one section per module:
 *
 *   [reservoir]  n_qubits, topology, shots, seed
 *   [encoding]   alpha, beta, gamma, alpha_prime, gamma_prime
 *   [transform]  a0, a1
 *   [noise]      preset, angle_jitter_sigma, p_flip_0to1, p_flip_1to0,
 *                crosstalk_kappa, jitter_mode
 *   [readout]    lambda, forgetting, bias
 *   [feedback]   policy, scale
 *   [run]        burn_in_fraction
 *   [mc]         drive_length, tau_max, train_fraction, ridge_lambda, seeds
 *   [narma]      length, alpha, beta, gamma, delta, mu, f0, f1, f2, period
 *   [forecast]   data
 *
 * A noise preset is applied first and explicit noise keys override it.
 * Missing keys keep their defaults; unknown keys are rejected.
 */
struct RunConfig {
    int n_qubits = 6;
    std::string topology;  ///< selector; empty means "self-loops:<n_qubits - 1>"
    int shots = 8192;
    std::uint64_t seed = 1;

    EncodingWeights weights;
    AsymTransformParams transform;
    std::string noise_preset = "rochester-like";
    NoiseModel noise = NoiseModel::rochester_like();
    ReadoutConfig readout;
    FeedbackConfig feedback;
    double burn_in_fraction = 1.0 / 3.0;

    McConfig mc;
    int mc_seeds = 10;

    std::size_t narma_length = 5000;
    NarmaParams narma;

    std::string data_path;

    [[nodiscard]] std::string topology_selector() const;

    /// Replaces the noise model with a named preset.
    void apply_noise_preset(const std::string& name);

    /// Throws ConfigError naming the first invalid field as "section.key".
    void validate() const;

    [[nodiscard]] ReservoirSpec reservoir_spec() const;
    [[nodiscard]] SweepSpec sweep_spec() const;
    [[nodiscard]] McConfig mc_config() const;
    [[nodiscard]] NarmaBenchConfig narma_config() const;
    [[nodiscard]] ForecastConfig forecast_config() const;
};

/// Parses INI text; throws ConfigError on unknown keys or unparsable values.
[[nodiscard]] RunConfig parse_config(const std::string& ini_text);
[[nodiscard]] RunConfig load_config(const std::filesystem::path& path);

/// Canonical INI form. Numbers use shortest round-trip formatting, so
/// parse_config(to_ini(c)) reproduces c exactly.
[[nodiscard]] std::string to_ini(const RunConfig& cfg);

[[nodiscard]] nlohmann::json to_json(const RunConfig& cfg);

}  // namespace qrc
