#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "qrc/topology.hpp"

namespace qrc {
namespace {

// Loops and edges as one comparable set; loops are encoded as (m, m).
std::set<std::pair<int, int>> connections(const ReservoirTopology& t) {
    std::set<std::pair<int, int>> out(t.edges().begin(), t.edges().end());
    for (int m = 0; m < t.n_qubits(); ++m) {
        if (t.self_loops()[m]) out.emplace(m, m);
    }
    return out;
}

TEST(Topology, SequenceLengthMatchesFormula) {
    EXPECT_EQ(build_sequence(6).size(), 22u);
    EXPECT_EQ(build_sequence(8).size(), 37u);
    for (int n = 2; n <= 10; ++n) EXPECT_EQ(build_sequence(n).size(), static_cast<std::size_t>(1 + max_connections(n)));
}

TEST(Topology, TwoQubitSequence) {
    const auto seq = build_sequence(2);
    ASSERT_EQ(seq.size(), 4u);
    EXPECT_EQ(seq[0], ReservoirTopology::empty(2));
    EXPECT_EQ(seq[1], ReservoirTopology(2, {true, false}, {}));
    EXPECT_EQ(seq[2], ReservoirTopology(2, {true, true}, {}));
    EXPECT_EQ(seq[3], ReservoirTopology(2, {true, true}, {{0, 1}}));
}

TEST(Topology, SequenceOrderLoopsThenCycleThenChords) {
    const auto seq = build_sequence(6);
    for (int k = 1; k <= 6; ++k) {
        EXPECT_EQ(seq[k].loop_count(), k);
        EXPECT_TRUE(seq[k].edges().empty());
        EXPECT_TRUE(seq[k].self_loops()[k - 1]);
    }
    const std::vector<Edge> cycle{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        EXPECT_TRUE(seq[7 + k].has_edge(cycle[k].first, cycle[k].second)) << "cycle edge " << k;
        EXPECT_EQ(seq[7 + k].edges().size(), k + 1);
    }
    // First chord is the lexicographically smallest non-cycle pair.
    EXPECT_TRUE(seq[13].has_edge(0, 2));
    EXPECT_TRUE(seq[14].has_edge(0, 3));
    EXPECT_TRUE(seq[21].has_edge(3, 5));
}

TEST(Topology, EachMemberAddsExactlyOneConnection) {
    for (int n : {2, 3, 6, 8}) {
        const auto seq = build_sequence(n);
        for (std::size_t k = 1; k < seq.size(); ++k) {
            const auto prev = connections(seq[k - 1]);
            const auto next = connections(seq[k]);
            EXPECT_TRUE(std::includes(next.begin(), next.end(), prev.begin(), prev.end()));
            EXPECT_EQ(next.size(), prev.size() + 1);
            EXPECT_EQ(seq[k].sequence_index(), static_cast<int>(k));
        }
        const auto& last = seq.back();
        EXPECT_EQ(last.loop_count(), n);
        EXPECT_EQ(static_cast<int>(last.edges().size()), n * (n - 1) / 2);
    }
}

TEST(Topology, EdgeDensity) {
    EXPECT_DOUBLE_EQ(edge_density(ReservoirTopology::empty(6)), 0.0);
    EXPECT_DOUBLE_EQ(edge_density(build_sequence(6).back()), 1.0);
    EXPECT_DOUBLE_EQ(edge_density(ReservoirTopology::with_self_loops(6, 5)), 5.0 / 21.0);

    const auto seq = build_sequence(7);
    for (std::size_t k = 1; k < seq.size(); ++k) EXPECT_LT(edge_density(seq[k - 1]), edge_density(seq[k]));
}

TEST(Topology, RejectsInvalidGraphs) {
    EXPECT_THROW(build_sequence(1), std::invalid_argument);
    EXPECT_THROW(ReservoirTopology(3, {false, false, false}, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(ReservoirTopology(3, {false, false, false}, {{0, 3}}), std::invalid_argument);
    EXPECT_THROW(ReservoirTopology(3, {false, false, false}, {{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(ReservoirTopology(3, {false, false}, {}), std::invalid_argument);
}

TEST(Topology, FeedbackSets) {
    const ReservoirTopology t(4, {true, false, false, true}, {{0, 2}, {1, 2}});
    EXPECT_EQ(t.feedback_set(0), (std::vector<int>{0, 2}));
    EXPECT_EQ(t.feedback_set(1), (std::vector<int>{2}));
    EXPECT_EQ(t.feedback_set(2), (std::vector<int>{0, 1}));
    EXPECT_EQ(t.feedback_set(3), (std::vector<int>{3}));
    EXPECT_TRUE(ReservoirTopology::with_self_loops(6, 5).feedback_set(5).empty());
}

TEST(Topology, SelectorResolution) {
    EXPECT_EQ(resolve_topology("self-loops:5", 6), ReservoirTopology::with_self_loops(6, 5));
    EXPECT_EQ(resolve_topology("sequence:9", 6), build_sequence(6)[9]);
    EXPECT_EQ(resolve_topology("empty", 4), ReservoirTopology::empty(4));
    EXPECT_EQ(resolve_topology("full", 4), build_sequence(4).back());
    EXPECT_THROW((void)resolve_topology("sequence:22", 6), std::invalid_argument);
    EXPECT_THROW((void)resolve_topology("self-loops:x", 6), std::invalid_argument);
    EXPECT_THROW((void)resolve_topology("ring", 6), std::invalid_argument);
}

TEST(Topology, JsonShapeAndRoundTrip) {
    for (const auto& t : build_sequence(5)) {
        const nlohmann::json j = t;
        EXPECT_EQ(j.at("n"), 5);
        EXPECT_EQ(j.at("loops").size(), 5u);
        EXPECT_EQ(topology_from_json(j), t);
    }
    const auto j = nlohmann::json::parse(R"({"n": 3, "loops": [true, false, false], "edges": [[2, 0]]})");
    const auto t = topology_from_json(j);
    EXPECT_TRUE(t.has_edge(0, 2));
    EXPECT_EQ(nlohmann::json(t).at("edges"), nlohmann::json::parse("[[0, 2]]"));
}

}  // namespace
}  // namespace qrc
