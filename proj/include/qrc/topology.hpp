#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qrc {

/// Undirected edge between two distinct qubits, stored with first < second.
using Edge = std::pair<int, int>;

/**
 * Reservoir connectivity graph on n qubit-nodes.
 *
 * Self-loops feed a qubit's previous average spin back into its own rotation
 * angle; an edge (i, j) feeds each endpoint's spin into the other's angle.
 * Both are realized in the classical pre-processing layer, so the graph only
 * decides which spins enter each qubit's feedback term.
 */
class ReservoirTopology {
public:
    /// Validates and normalizes (edges sorted, each pair ordered i < j).
    /// Throws std::invalid_argument on self-pairs, duplicate or out-of-range edges.
    ReservoirTopology(int n_qubits, std::vector<bool> self_loops, std::vector<Edge> edges,
                      std::optional<int> sequence_index = std::nullopt);

    static ReservoirTopology empty(int n_qubits);

    /// First `count` qubits carry self-loops, no edges. Equals build_sequence(n)[count].
    static ReservoirTopology with_self_loops(int n_qubits, int count);

    [[nodiscard]] int n_qubits() const noexcept { return n_; }
    [[nodiscard]] const std::vector<bool>& self_loops() const noexcept { return loops_; }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] std::optional<int> sequence_index() const noexcept { return sequence_index_; }

    [[nodiscard]] int loop_count() const noexcept;
    [[nodiscard]] bool has_edge(int i, int j) const noexcept;

    /// Qubits whose spins feed qubit m: m itself when it has a self-loop, then
    /// its graph neighbors in ascending order. Empty means m is loop-free.
    [[nodiscard]] const std::vector<int>& feedback_set(int m) const { return feedback_.at(m); }

    /// Short human-readable label, e.g. "5 loops + 0 edges".
    [[nodiscard]] std::string label() const;

    friend bool operator==(const ReservoirTopology& a, const ReservoirTopology& b) {
        return a.n_ == b.n_ && a.loops_ == b.loops_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<bool> loops_;
    std::vector<Edge> edges_;
    std::optional<int> sequence_index_;
    std::vector<std::vector<int>> feedback_;
};

/// Number of possible loops plus edges on n qubits: n + n(n-1)/2.
[[nodiscard]] constexpr int max_connections(int n) noexcept { return n + n * (n - 1) / 2; }

/**
 * Ordered complexity sequence of 1 + n + n(n-1)/2 graphs: the empty graph,
 * then self-loops added on qubits 0..n-1, then the cycle edges
 * (0,1),(1,2),...,(n-1,0), then the remaining chords in lexicographic order
 * until the graph is complete. Each member adds exactly one loop or edge to
 * its predecessor. Throws std::invalid_argument for n < 2.
 */
[[nodiscard]] std::vector<ReservoirTopology> build_sequence(int n);

/// (self-loops + edges) / (n + n(n-1)/2), in [0, 1].
[[nodiscard]] double edge_density(const ReservoirTopology& t) noexcept;

/**
 * Resolves a selector string into a topology on n qubits:
 *   "empty", "full", "self-loops:K", "sequence:I".
 * Throws std::invalid_argument for malformed selectors or out-of-range values.
 */
[[nodiscard]] ReservoirTopology resolve_topology(const std::string& selector, int n);

// JSON form: {"n": int, "loops": [bool], "edges": [[i, j], ...]}
void to_json(nlohmann::json& j, const ReservoirTopology& t);
[[nodiscard]] ReservoirTopology topology_from_json(const nlohmann::json& j);

}  // namespace qrc
