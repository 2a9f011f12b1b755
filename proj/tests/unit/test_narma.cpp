#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qrc/errors.hpp"
#include "qrc/narma.hpp"

namespace qrc {
namespace {

TEST(Narma, InputSignal) {
    const auto s = gen_narma5(200, NarmaParams{});
    EXPECT_NEAR(s.input[0], 0.1, 1e-15);
    for (double v : s.input) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 0.2 + 1e-15);
    }
    // Period 100 with integer frequency multiples would repeat; the default ones do not.
    EXPECT_NE(s.input[1], s.input[101]);
}

TEST(Narma, RecurrenceAndInitialZeros) {
    const NarmaParams p;
    const auto s = gen_narma5(50, p);
    for (int t = 0; t < 5; ++t) EXPECT_EQ(s.target[static_cast<std::size_t>(t)], 0.0);
    for (std::size_t t = 4; t + 1 < 50; ++t) {
        const auto& v = s.target;
        double sum = 0.0;
        for (std::size_t i = 0; i < 5; ++i) sum += v[t - i];
        EXPECT_NEAR(v[t + 1], p.alpha * v[t] + p.beta * v[t] * sum + p.gamma * s.input[t - 4] * s.input[t] + p.delta,
                    1e-15);
    }
    EXPECT_NEAR(s.target[5], 0.1 + 1.5 * 0.1 * s.input[4], 1e-15);
}

TEST(Narma, BoundedOverLongRun) {
    const auto s = gen_narma5(5000, NarmaParams{});
    for (double v : s.target) {
        ASSERT_TRUE(std::isfinite(v));
        ASSERT_LT(std::abs(v), 1.0);
    }
}

TEST(Narma, DivergenceIsReported) {
    NarmaParams p;
    p.alpha = 1.5;
    p.beta = 0.5;
    try {
        (void)gen_narma5(5000, p);
        FAIL() << "expected GenerationDiverged";
    } catch (const GenerationDiverged& e) {
        EXPECT_GT(e.step(), 5u);
    }
    EXPECT_THROW((void)gen_narma5(5, NarmaParams{}), std::invalid_argument);
}

TEST(Nmse, Values) {
    const std::vector<double> a{1.0, -2.0, 0.5};
    EXPECT_DOUBLE_EQ(nmse(a, a), 0.0);
    std::vector<double> scaled;
    for (double v : a) scaled.push_back(1.1 * v);
    EXPECT_NEAR(nmse(scaled, a), 0.01, 1e-15);
    EXPECT_DOUBLE_EQ(nmse(std::vector<double>(3, 0.0), a), 1.0);
    EXPECT_THROW((void)nmse(a, std::vector<double>(3, 0.0)), InvalidData);
    EXPECT_THROW((void)nmse(a, std::vector<double>(2, 1.0)), std::invalid_argument);
}

TEST(Narma, PerfectMemoryOracleSolvesTask) {
    // Features (v_t, ..., v_{t-4}, s_t, s_{t-4}, products) make v_{t+1} exactly linear,
    // so ridge on them must reach NMSE near zero.
    const NarmaParams p;
    const auto s = gen_narma5(3000, p);
    testing::Matrix rows;
    std::vector<double> y;
    for (std::size_t t = 4; t + 1 < 3000; ++t) {
        const auto& v = s.target;
        const double sum = v[t] + v[t - 1] + v[t - 2] + v[t - 3] + v[t - 4];
        rows.push_back({v[t], v[t] * sum, s.input[t - 4] * s.input[t], 1.0});
        y.push_back(v[t + 1]);
    }
    const auto w = testing::batch_ridge(rows, y, 1e-12);
    std::vector<double> pred;
    for (const auto& r : rows) pred.push_back(w[0] * r[0] + w[1] * r[1] + w[2] * r[2] + w[3] * r[3]);
    EXPECT_LT(nmse(pred, y), 1e-6);
}

TEST(NarmaBenchmark, RecordLayoutAndBurnIn) {
    NarmaBenchConfig cfg;
    cfg.length = 600;
    cfg.reservoir.shots = 1024;
    const auto report = run_narma_benchmark(cfg);
    ASSERT_EQ(report.records.size(), 599u);
    EXPECT_EQ(report.burn_in, 199u);
    const auto series = gen_narma5(600, cfg.params);
    for (std::size_t t = 0; t < report.records.size(); ++t) {
        EXPECT_EQ(report.records[t].t, t);
        EXPECT_EQ(report.records[t].actual, series.target[t + 1]);
    }
    EXPECT_EQ(report.records[0].predicted, 0.0);
}

TEST(NarmaBenchmark, BeatsBaselines) {
    const auto report = run_narma_benchmark(NarmaBenchConfig{});
    std::vector<double> actual;
    std::vector<double> predicted;
    for (std::size_t i = report.burn_in; i < report.records.size(); ++i) {
        actual.push_back(report.records[i].actual);
        predicted.push_back(report.records[i].predicted);
    }

    // The score is not centred, so a constant mean predictor already scores well.
    double m = 0.0;
    for (double v : actual) m += v;
    m /= static_cast<double>(actual.size());
    EXPECT_LT(report.nmse, 0.6 * nmse(std::vector<double>(actual.size(), m), actual));

    // Predictions paired with the wrong targets lose the signal.
    std::mt19937_64 gen(3);
    std::shuffle(predicted.begin(), predicted.end(), gen);
    EXPECT_GT(nmse(predicted, actual), 2.0 * report.nmse);
}

TEST(NarmaBenchmark, FeedbackPolicyChangesResult) {
    NarmaBenchConfig cfg;
    cfg.length = 1500;
    cfg.reservoir.shots = 1024;
    const auto with = run_narma_benchmark(cfg);
    cfg.feedback.policy = FeedbackPolicy::none;
    const auto without = run_narma_benchmark(cfg);
    EXPECT_NE(with.nmse, without.nmse);
}

TEST(NarmaBenchmark, DeterministicPerSeed) {
    NarmaBenchConfig cfg;
    cfg.length = 400;
    cfg.reservoir.shots = 512;
    const auto a = run_narma_benchmark(cfg);
    const auto b = run_narma_benchmark(cfg);
    EXPECT_EQ(a.nmse, b.nmse);
    cfg.seed = 2;
    EXPECT_NE(run_narma_benchmark(cfg).nmse, a.nmse);
}

}  // namespace
}  // namespace qrc
