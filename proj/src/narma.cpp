#include "qrc/narma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "qrc/errors.hpp"

namespace qrc {

void NarmaParams::validate() const {
    const double values[] = {alpha, beta, gamma, delta, mu, f0, f1, f2, period};
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("narma parameters must be finite");
    }
    if (!(period > 0.0)) throw std::invalid_argument("narma.period must be > 0");
}

NarmaSeries gen_narma5(std::size_t length, const NarmaParams& p) {
    if (length < 6) throw std::invalid_argument(fmt::format("gen_narma5: length must be >= 6, got {}", length));
    p.validate();

    constexpr double two_pi = 2.0 * std::numbers::pi;
    NarmaSeries out{std::vector<double>(length), std::vector<double>(length, 0.0)};
    for (std::size_t t = 0; t < length; ++t) {
        const double phase = two_pi * static_cast<double>(t) / p.period;
        out.input[t] = p.mu * (std::sin(p.f0 * phase) * std::sin(p.f1 * phase) * std::sin(p.f2 * phase) + 1.0);
    }

    auto& v = out.target;
    const auto& s = out.input;
    for (std::size_t t = 4; t + 1 < length; ++t) {
        const double window = v[t] + v[t - 1] + v[t - 2] + v[t - 3] + v[t - 4];
        v[t + 1] = p.alpha * v[t] + p.beta * v[t] * window + p.gamma * s[t - 4] * s[t] + p.delta;
        if (!std::isfinite(v[t + 1]) || std::abs(v[t + 1]) > 1e6) {
            throw GenerationDiverged(fmt::format("gen_narma5: series diverged at t = {}", t + 1), t + 1);
        }
    }
    return out;
}

double nmse(std::span<const double> predicted, std::span<const double> actual) {
    if (actual.empty() || predicted.size() != actual.size()) {
        throw std::invalid_argument(
            fmt::format("nmse: need equal non-zero lengths, got {} and {}", predicted.size(), actual.size()));
    }
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const double d = actual[i] - predicted[i];
        num += d * d;
        den += actual[i] * actual[i];
    }
    if (den == 0.0) throw InvalidData("nmse: actual series is identically zero");
    return num / den;
}

NarmaReport run_narma_benchmark(const NarmaBenchConfig& cfg) {
    if (!(cfg.burn_in_fraction > 0.0 && cfg.burn_in_fraction < 1.0)) {
        throw std::invalid_argument("narma: burn_in_fraction must lie in (0, 1)");
    }
    if (!(cfg.params.mu > 0.0)) throw std::invalid_argument("narma: mu must be > 0 to rescale the input");

    const auto series = gen_narma5(cfg.length, cfg.params);
    const double input_scale = 1.0 / (2.0 * cfg.params.mu);
    std::vector<double> scaled(series.input.size());
    for (std::size_t t = 0; t < scaled.size(); ++t) scaled[t] = series.input[t] * input_scale;

    const std::size_t steps = cfg.length - 1;
    NarmaReport report;
    report.burn_in = static_cast<std::size_t>(static_cast<double>(steps) * cfg.burn_in_fraction);
    report.records.reserve(steps);

    Reservoir reservoir(cfg.reservoir, cfg.seed);
    const auto n = static_cast<std::size_t>(reservoir.n_qubits());
    auto readout = ReadoutState::initial(n + (cfg.readout.bias ? 1 : 0), cfg.readout.lambda, cfg.readout.forgetting);
    ErrorFeedback feedback(cfg.feedback.policy, report.burn_in, cfg.feedback.scale);

    std::vector<double> window(n);
    std::vector<double> features(readout.dim(), 1.0);
    double error = 0.0;
    for (std::size_t t = 0; t < steps; ++t) {
        for (std::size_t m = 0; m < n; ++m) window[m] = t >= m ? scaled[t - m] : 0.0;
        const auto& spins = reservoir.step(window, error);
        std::copy(spins.s.begin(), spins.s.end(), features.begin());

        const auto record = ForecastRecord::make(t, series.target[t + 1], predict(readout, features));
        readout = update(std::move(readout), features, record.actual);
        error = feedback.next(record.residual);
        report.records.push_back(record);
    }

    std::vector<double> predicted;
    std::vector<double> actual;
    for (std::size_t i = report.burn_in; i < report.records.size(); ++i) {
        predicted.push_back(report.records[i].predicted);
        actual.push_back(report.records[i].actual);
    }
    report.nmse = nmse(predicted, actual);
    return report;
}

}  // namespace qrc
