#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qrc {

/**
 * Online linear readout trained by recursive least squares.
 *
 * P starts at I / lambda, which makes the iterates (with forgetting = 1) equal
 * to the ridge solution (lambda I + X^T X)^{-1} X^T y over all samples seen so
 * far. forgetting < 1 discounts old samples geometrically.
 */
struct ReadoutState {
    Eigen::VectorXd w;
    Eigen::MatrixXd P;
    double lambda = 1e-3;
    double forgetting = 1.0;

    /// Zero weights, P = I / lambda. Throws std::invalid_argument for dim < 1,
    /// lambda <= 0 or forgetting outside (0, 1].
    static ReadoutState initial(std::size_t dim, double lambda = 1e-3, double forgetting = 1.0);

    [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(w.size()); }
};

/// w . features. Throws std::invalid_argument on a dimension mismatch.
[[nodiscard]] double predict(const ReadoutState& state, std::span<const double> features);

/// One RLS step towards `target`. Throws InvalidData for a non-finite target,
/// std::invalid_argument on a dimension mismatch.
[[nodiscard]] ReadoutState update(ReadoutState state, std::span<const double> features, double target);

/// One forecast: residual is always actual - predicted.
struct ForecastRecord {
    std::size_t t = 0;
    double actual = 0.0;
    double predicted = 0.0;
    double residual = 0.0;

    static ForecastRecord make(std::size_t t, double actual, double predicted) {
        return {t, actual, predicted, actual - predicted};
    }
};

/// Mean squared residual; throws std::invalid_argument when empty.
[[nodiscard]] double mse(std::span<const ForecastRecord> records);

/// Maps a residual into [0, 1): 1 - exp(-|residual| / scale).
/// Throws std::invalid_argument unless scale > 0.
[[nodiscard]] double squash_error(double residual, double scale);

/// How the squashing scale of the error feedback is chosen.
enum class FeedbackPolicy {
    burn_in_mean,  ///< running mean |residual| during burn-in, frozen afterwards
    fixed,         ///< a constant scale
    none,          ///< feedback disabled (e = 0)
};

[[nodiscard]] std::string to_string(FeedbackPolicy policy);
[[nodiscard]] FeedbackPolicy feedback_policy_from_string(const std::string& name);

/// Turns the residual stream into the error input of the next step.
class ErrorFeedback {
public:
    ErrorFeedback(FeedbackPolicy policy, std::size_t burn_in_steps, double fixed_scale = 1.0);

    /// Consumes the newest residual, returns e in [0, 1). A zero scale (every
    /// residual so far exactly 0) yields 0.
    double next(double residual);

    [[nodiscard]] double scale() const noexcept { return scale_; }

private:
    FeedbackPolicy policy_;
    std::size_t burn_in_steps_;
    std::size_t seen_ = 0;
    double abs_sum_ = 0.0;
    double scale_;
};

/// Readout settings shared by the forecasting workflows.
struct ReadoutConfig {
    double lambda = 1e-3;
    double forgetting = 1.0;
    bool bias = true;  ///< append a constant 1 to the spin features
};

struct FeedbackConfig {
    FeedbackPolicy policy = FeedbackPolicy::burn_in_mean;
    double scale = 1.0;  ///< used by FeedbackPolicy::fixed only
};

/// Ridge regression on the rows of X: argmin |X w - y|^2 + lambda |w|^2.
[[nodiscard]] Eigen::VectorXd ridge_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double lambda);

}  // namespace qrc
