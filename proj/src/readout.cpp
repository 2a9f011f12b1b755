#include "qrc/readout.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "qrc/errors.hpp"

namespace qrc {

ReadoutState ReadoutState::initial(std::size_t dim, double lambda, double forgetting) {
    if (dim < 1) throw std::invalid_argument("readout: dimension must be >= 1");
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("readout: lambda must be > 0");
    if (!(forgetting > 0.0 && forgetting <= 1.0)) {
        throw std::invalid_argument("readout: forgetting factor must lie in (0, 1]");
    }
    const auto d = static_cast<Eigen::Index>(dim);
    return ReadoutState{Eigen::VectorXd::Zero(d), Eigen::MatrixXd::Identity(d, d) / lambda, lambda, forgetting};
}

namespace {

Eigen::Map<const Eigen::VectorXd> as_vector(const ReadoutState& state, std::span<const double> features) {
    if (features.size() != state.dim()) {
        throw std::invalid_argument(
            fmt::format("readout: {} features for a {}-dimensional readout", features.size(), state.dim()));
    }
    return {features.data(), static_cast<Eigen::Index>(features.size())};
}

}  // namespace

double predict(const ReadoutState& state, std::span<const double> features) {
    return state.w.dot(as_vector(state, features));
}

ReadoutState update(ReadoutState state, std::span<const double> features, double target) {
    if (!std::isfinite(target)) throw InvalidData("readout: non-finite target");
    const auto s = as_vector(state, features);

    const Eigen::VectorXd Ps = state.P * s;
    const double denom = state.forgetting + s.dot(Ps);
    const Eigen::VectorXd gain = Ps / denom;
    state.w += gain * (target - state.w.dot(s));
    state.P = (state.P - gain * Ps.transpose()) / state.forgetting;
    // P is symmetric in exact arithmetic; keep it so numerically.
    state.P = 0.5 * (state.P + state.P.transpose()).eval();
    return state;
}

double mse(std::span<const ForecastRecord> records) {
    if (records.empty()) throw std::invalid_argument("mse: no records");
    double sum = 0.0;
    for (const auto& r : records) sum += r.residual * r.residual;
    return sum / static_cast<double>(records.size());
}

double squash_error(double residual, double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument(fmt::format("squash_error: scale must be > 0, got {}", scale));
    return 1.0 - std::exp(-std::abs(residual) / scale);
}

std::string to_string(FeedbackPolicy policy) {
    switch (policy) {
        case FeedbackPolicy::burn_in_mean: return "burn-in-mean";
        case FeedbackPolicy::fixed: return "fixed";
        case FeedbackPolicy::none: return "none";
    }
    return "none";
}

FeedbackPolicy feedback_policy_from_string(const std::string& name) {
    if (name == "burn-in-mean") return FeedbackPolicy::burn_in_mean;
    if (name == "fixed") return FeedbackPolicy::fixed;
    if (name == "none") return FeedbackPolicy::none;
    throw std::invalid_argument(fmt::format("unknown feedback policy '{}'", name));
}

ErrorFeedback::ErrorFeedback(FeedbackPolicy policy, std::size_t burn_in_steps, double fixed_scale)
    : policy_(policy), burn_in_steps_(burn_in_steps), scale_(policy == FeedbackPolicy::fixed ? fixed_scale : 0.0) {
    if (policy_ == FeedbackPolicy::fixed && !(fixed_scale > 0.0)) {
        throw std::invalid_argument("feedback: fixed scale must be > 0");
    }
}

double ErrorFeedback::next(double residual) {
    switch (policy_) {
        case FeedbackPolicy::none:
            return 0.0;
        case FeedbackPolicy::fixed:
            return squash_error(residual, scale_);
        case FeedbackPolicy::burn_in_mean:
            if (seen_ < burn_in_steps_) {
                abs_sum_ += std::abs(residual);
                ++seen_;
                scale_ = abs_sum_ / static_cast<double>(seen_);
            }
            return scale_ > 0.0 ? squash_error(residual, scale_) : 0.0;
    }
    return 0.0;
}

Eigen::VectorXd ridge_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double lambda) {
    if (X.rows() != y.size()) throw std::invalid_argument("ridge_fit: row count mismatch");
    Eigen::MatrixXd gram = X.transpose() * X;
    gram.diagonal().array() += lambda;
    return gram.ldlt().solve(X.transpose() * y);
}

}  // namespace qrc
