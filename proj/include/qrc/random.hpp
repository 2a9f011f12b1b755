#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qrc {

/// Mixes a base seed with a path of integers (seed index, topology index, stream
/// tag...) into an independent 64-bit seed. Uses std::seed_seq, whose algorithm
/// is fixed by the standard.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path);

/// Seedable random stream shared by every stochastic layer.
///
/// uniform() is built directly from the top 53 bits of mt19937_64, so a given
/// seed yields the same uniforms with any standard library.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double normal(double mean, double sigma) {
        return mean + sigma * standard_normal_(engine_);
    }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> standard_normal_{0.0, 1.0};
};

}  // namespace qrc
