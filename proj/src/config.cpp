#include "qrc/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "qrc/errors.hpp"

namespace qrc {

std::string RunConfig::topology_selector() const {
    return topology.empty() ? fmt::format("self-loops:{}", n_qubits - 1) : topology;
}

void RunConfig::apply_noise_preset(const std::string& name) {
    try {
        noise = qrc::noise_preset(name);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("noise.preset", e.what());
    }
    noise_preset = name;
}

namespace {

void require(bool ok, const char* field, const std::string& message) {
    if (!ok) throw ConfigError(field, message);
}

bool unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

void RunConfig::validate() const {
    require(n_qubits >= 2, "reservoir.n_qubits", "must be >= 2");
    try {
        (void)resolve_topology(topology_selector(), n_qubits);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("reservoir.topology", e.what());
    }
    require(shots >= 1, "reservoir.shots", "must be >= 1");

    require(weights.alpha >= 0.0, "encoding.alpha", "must be >= 0");
    require(weights.beta >= 0.0, "encoding.beta", "must be >= 0");
    require(weights.gamma >= 0.0, "encoding.gamma", "must be >= 0");
    require(weights.alpha_prime >= 0.0, "encoding.alpha_prime", "must be >= 0");
    require(weights.gamma_prime >= 0.0, "encoding.gamma_prime", "must be >= 0");
    require(weights.alpha + weights.beta + weights.gamma <= 1.0 + 1e-12, "encoding.gamma",
            "alpha + beta + gamma must not exceed 1");
    require(weights.alpha_prime + weights.gamma_prime <= 1.0 + 1e-12, "encoding.gamma_prime",
            "alpha_prime + gamma_prime must not exceed 1");
    require(std::isfinite(transform.a0), "transform.a0", "must be finite");
    require(std::isfinite(transform.a1), "transform.a1", "must be finite");

    require(std::isfinite(noise.angle_jitter_sigma) && noise.angle_jitter_sigma >= 0.0, "noise.angle_jitter_sigma",
            "must be finite and >= 0");
    require(unit_interval(noise.p_flip_0to1), "noise.p_flip_0to1", "must lie in [0, 1]");
    require(unit_interval(noise.p_flip_1to0), "noise.p_flip_1to0", "must lie in [0, 1]");
    require(std::isfinite(noise.crosstalk_kappa) && noise.crosstalk_kappa >= 0.0, "noise.crosstalk_kappa",
            "must be finite and >= 0");

    require(readout.lambda > 0.0 && std::isfinite(readout.lambda), "readout.lambda", "must be > 0");
    require(readout.forgetting > 0.0 && readout.forgetting <= 1.0, "readout.forgetting", "must lie in (0, 1]");
    require(feedback.policy != FeedbackPolicy::fixed || feedback.scale > 0.0, "feedback.scale", "must be > 0");
    require(burn_in_fraction > 0.0 && burn_in_fraction < 1.0, "run.burn_in_fraction", "must lie in (0, 1)");

    require(mc.tau_max >= 1, "mc.tau_max", "must be >= 1");
    require(mc.train_fraction > 0.0 && mc.train_fraction < 1.0, "mc.train_fraction", "must lie in (0, 1)");
    require(mc.ridge_lambda > 0.0, "mc.ridge_lambda", "must be > 0");
    require(mc.drive_length > mc_config().burn_in() + static_cast<std::size_t>(mc.tau_max) + 10, "mc.drive_length",
            "too short for the burn-in and tau_max");
    require(mc_seeds >= 1, "mc.seeds", "must be >= 1");

    require(narma_length >= 6, "narma.length", "must be >= 6");
    require(narma.period > 0.0, "narma.period", "must be > 0");
    require(narma.mu > 0.0, "narma.mu", "must be > 0");
}

ReservoirSpec RunConfig::reservoir_spec() const {
    return ReservoirSpec{resolve_topology(topology_selector(), n_qubits), weights, noise, shots};
}

SweepSpec RunConfig::sweep_spec() const { return SweepSpec{weights, noise, shots}; }

McConfig RunConfig::mc_config() const {
    McConfig out = mc;
    out.burn_in_fraction = burn_in_fraction;
    return out;
}

NarmaBenchConfig RunConfig::narma_config() const {
    return NarmaBenchConfig{narma_length, narma, reservoir_spec(), readout, feedback, burn_in_fraction, seed};
}

ForecastConfig RunConfig::forecast_config() const {
    return ForecastConfig{reservoir_spec(), transform, readout, feedback, burn_in_fraction, seed, std::nullopt};
}

namespace {

using Setter = std::function<void(RunConfig&, const std::string&)>;

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ConfigError(key, fmt::format("'{}' is not a valid number", text));
    }
    return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1") return true;
    if (text == "false" || text == "0") return false;
    throw ConfigError(key, fmt::format("'{}' is not a boolean", text));
}

#define QRC_NUM(expr)                                                            \
    [](RunConfig& c, const std::string& v) {                                    \
        using T = std::remove_reference_t<decltype(c.expr)>;                    \
        c.expr = parse_number<T>(#expr, v);                                     \
    }

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table{
        {"reservoir.n_qubits", QRC_NUM(n_qubits)},
        {"reservoir.topology", [](RunConfig& c, const std::string& v) { c.topology = v; }},
        {"reservoir.shots", QRC_NUM(shots)},
        {"reservoir.seed", QRC_NUM(seed)},
        {"encoding.alpha", QRC_NUM(weights.alpha)},
        {"encoding.beta", QRC_NUM(weights.beta)},
        {"encoding.gamma", QRC_NUM(weights.gamma)},
        {"encoding.alpha_prime", QRC_NUM(weights.alpha_prime)},
        {"encoding.gamma_prime", QRC_NUM(weights.gamma_prime)},
        {"transform.a0", QRC_NUM(transform.a0)},
        {"transform.a1", QRC_NUM(transform.a1)},
        {"noise.angle_jitter_sigma", QRC_NUM(noise.angle_jitter_sigma)},
        {"noise.p_flip_0to1", QRC_NUM(noise.p_flip_0to1)},
        {"noise.p_flip_1to0", QRC_NUM(noise.p_flip_1to0)},
        {"noise.crosstalk_kappa", QRC_NUM(noise.crosstalk_kappa)},
        {"noise.jitter_mode",
         [](RunConfig& c, const std::string& v) {
             try {
                 c.noise.jitter_mode = jitter_mode_from_string(v);
             } catch (const std::invalid_argument& e) {
                 throw ConfigError("noise.jitter_mode", e.what());
             }
         }},
        {"readout.lambda", QRC_NUM(readout.lambda)},
        {"readout.forgetting", QRC_NUM(readout.forgetting)},
        {"readout.bias", [](RunConfig& c, const std::string& v) { c.readout.bias = parse_bool("readout.bias", v); }},
        {"feedback.policy",
         [](RunConfig& c, const std::string& v) {
             try {
                 c.feedback.policy = feedback_policy_from_string(v);
             } catch (const std::invalid_argument& e) {
                 throw ConfigError("feedback.policy", e.what());
             }
         }},
        {"feedback.scale", QRC_NUM(feedback.scale)},
        {"run.burn_in_fraction", QRC_NUM(burn_in_fraction)},
        {"mc.drive_length", QRC_NUM(mc.drive_length)},
        {"mc.tau_max", QRC_NUM(mc.tau_max)},
        {"mc.train_fraction", QRC_NUM(mc.train_fraction)},
        {"mc.ridge_lambda", QRC_NUM(mc.ridge_lambda)},
        {"mc.seeds", QRC_NUM(mc_seeds)},
        {"narma.length", QRC_NUM(narma_length)},
        {"narma.alpha", QRC_NUM(narma.alpha)},
        {"narma.beta", QRC_NUM(narma.beta)},
        {"narma.gamma", QRC_NUM(narma.gamma)},
        {"narma.delta", QRC_NUM(narma.delta)},
        {"narma.mu", QRC_NUM(narma.mu)},
        {"narma.f0", QRC_NUM(narma.f0)},
        {"narma.f1", QRC_NUM(narma.f1)},
        {"narma.f2", QRC_NUM(narma.f2)},
        {"narma.period", QRC_NUM(narma.period)},
        {"forecast.data", [](RunConfig& c, const std::string& v) { c.data_path = v; }},
    };
    return table;
}

#undef QRC_NUM

}  // namespace

RunConfig parse_config(const std::string& ini_text) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    std::istringstream in(ini_text);
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError("config", e.message() + fmt::format(" (line {})", e.line()));
    }

    RunConfig cfg;
    // The preset goes first so explicit noise keys can override it.
    if (const auto preset = tree.get_optional<std::string>("noise.preset")) cfg.apply_noise_preset(*preset);

    for (const auto& [section, body] : tree) {
        if (body.empty()) throw ConfigError(section, "keys must live inside a [section]");
        for (const auto& [key, value] : body) {
            const std::string name = section + "." + key;
            if (name == "noise.preset") continue;
            const auto it = setters().find(name);
            if (it == setters().end()) throw ConfigError(name, "unknown key");
            try {
                it->second(cfg, value.data());
            } catch (const ConfigError&) {
                throw ConfigError(name, fmt::format("'{}' is not valid", value.data()));
            }
        }
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", fmt::format("cannot read '{}'", path.string()));
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string to_ini(const RunConfig& c) {
    std::string out;
    auto section = [&out](const char* name) { out += fmt::format("{}[{}]\n", out.empty() ? "" : "\n", name); };
    auto put = [&out](const char* key, const auto& value) { out += fmt::format("{} = {}\n", key, value); };

    section("reservoir");
    put("n_qubits", c.n_qubits);
    put("topology", c.topology_selector());
    put("shots", c.shots);
    put("seed", c.seed);
    section("encoding");
    put("alpha", c.weights.alpha);
    put("beta", c.weights.beta);
    put("gamma", c.weights.gamma);
    put("alpha_prime", c.weights.alpha_prime);
    put("gamma_prime", c.weights.gamma_prime);
    section("transform");
    put("a0", c.transform.a0);
    put("a1", c.transform.a1);
    section("noise");
    put("preset", c.noise_preset);
    put("angle_jitter_sigma", c.noise.angle_jitter_sigma);
    put("p_flip_0to1", c.noise.p_flip_0to1);
    put("p_flip_1to0", c.noise.p_flip_1to0);
    put("crosstalk_kappa", c.noise.crosstalk_kappa);
    put("jitter_mode", to_string(c.noise.jitter_mode));
    section("readout");
    put("lambda", c.readout.lambda);
    put("forgetting", c.readout.forgetting);
    put("bias", c.readout.bias ? "true" : "false");
    section("feedback");
    put("policy", to_string(c.feedback.policy));
    put("scale", c.feedback.scale);
    section("run");
    put("burn_in_fraction", c.burn_in_fraction);
    section("mc");
    put("drive_length", c.mc.drive_length);
    put("tau_max", c.mc.tau_max);
    put("train_fraction", c.mc.train_fraction);
    put("ridge_lambda", c.mc.ridge_lambda);
    put("seeds", c.mc_seeds);
    section("narma");
    put("length", c.narma_length);
    put("alpha", c.narma.alpha);
    put("beta", c.narma.beta);
    put("gamma", c.narma.gamma);
    put("delta", c.narma.delta);
    put("mu", c.narma.mu);
    put("f0", c.narma.f0);
    put("f1", c.narma.f1);
    put("f2", c.narma.f2);
    put("period", c.narma.period);
    if (!c.data_path.empty()) {
        section("forecast");
        put("data", c.data_path);
    }
    return out;
}

nlohmann::json to_json(const RunConfig& c) {
    return {
        {"reservoir", {{"n_qubits", c.n_qubits}, {"topology", c.topology_selector()}, {"shots", c.shots},
                       {"seed", c.seed}}},
        {"encoding", {{"alpha", c.weights.alpha}, {"beta", c.weights.beta}, {"gamma", c.weights.gamma},
                      {"alpha_prime", c.weights.alpha_prime}, {"gamma_prime", c.weights.gamma_prime}}},
        {"transform", {{"a0", c.transform.a0}, {"a1", c.transform.a1}}},
        {"noise", {{"preset", c.noise_preset}, {"angle_jitter_sigma", c.noise.angle_jitter_sigma},
                   {"p_flip_0to1", c.noise.p_flip_0to1}, {"p_flip_1to0", c.noise.p_flip_1to0},
                   {"crosstalk_kappa", c.noise.crosstalk_kappa}, {"jitter_mode", to_string(c.noise.jitter_mode)}}},
        {"readout", {{"lambda", c.readout.lambda}, {"forgetting", c.readout.forgetting}, {"bias", c.readout.bias}}},
        {"feedback", {{"policy", to_string(c.feedback.policy)}, {"scale", c.feedback.scale}}},
        {"run", {{"burn_in_fraction", c.burn_in_fraction}}},
        {"mc", {{"drive_length", c.mc.drive_length}, {"tau_max", c.mc.tau_max},
                {"train_fraction", c.mc.train_fraction}, {"ridge_lambda", c.mc.ridge_lambda},
                {"seeds", c.mc_seeds}}},
        {"narma", {{"length", c.narma_length}, {"alpha", c.narma.alpha}, {"beta", c.narma.beta},
                   {"gamma", c.narma.gamma}, {"delta", c.narma.delta}, {"mu", c.narma.mu}, {"f0", c.narma.f0},
                   {"f1", c.narma.f1}, {"f2", c.narma.f2}, {"period", c.narma.period}}},
        {"forecast", {{"data", c.data_path}}},
    };
}

}  // namespace qrc
