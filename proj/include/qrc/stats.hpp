#pragma once

#include <optional>
#include <span>

namespace qrc {

[[nodiscard]] double mean(std::span<const double> x);

/// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
[[nodiscard]] double sample_stddev(std::span<const double> x);

/// Pearson correlation, or nullopt when either side has zero variance or the
/// lengths differ / are below two.
[[nodiscard]] std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

}  // namespace qrc
