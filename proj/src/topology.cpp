#include "qrc/topology.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include <fmt/format.h>

namespace qrc {

ReservoirTopology::ReservoirTopology(int n_qubits, std::vector<bool> self_loops,
                                     std::vector<Edge> edges,
                                     std::optional<int> sequence_index)
    : n_(n_qubits), loops_(std::move(self_loops)), edges_(std::move(edges)),
      sequence_index_(sequence_index) {
    if (n_ < 1) throw std::invalid_argument("topology: n_qubits must be positive");
    if (static_cast<int>(loops_.size()) != n_) {
        throw std::invalid_argument(
            fmt::format("topology: {} self-loop flags for {} qubits", loops_.size(), n_));
    }
    for (auto& [i, j] : edges_) {
        if (i == j) throw std::invalid_argument(fmt::format("topology: edge ({},{}) is a self-pair", i, j));
        if (i < 0 || j < 0 || i >= n_ || j >= n_) {
            throw std::invalid_argument(fmt::format("topology: edge ({},{}) out of range", i, j));
        }
        if (i > j) std::swap(i, j);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("topology: duplicate edge");
    }

    feedback_.assign(static_cast<std::size_t>(n_), {});
    for (int m = 0; m < n_; ++m) {
        if (loops_[m]) feedback_[m].push_back(m);
    }
    for (const auto& [i, j] : edges_) {
        feedback_[i].push_back(j);
        feedback_[j].push_back(i);
    }
    for (auto& set : feedback_) std::sort(set.begin(), set.end());
}

ReservoirTopology ReservoirTopology::empty(int n_qubits) {
    return ReservoirTopology(n_qubits, std::vector<bool>(static_cast<std::size_t>(n_qubits), false), {}, 0);
}

ReservoirTopology ReservoirTopology::with_self_loops(int n_qubits, int count) {
    if (count < 0 || count > n_qubits) {
        throw std::invalid_argument(fmt::format("topology: cannot place {} self-loops on {} qubits", count, n_qubits));
    }
    std::vector<bool> loops(static_cast<std::size_t>(n_qubits), false);
    std::fill_n(loops.begin(), count, true);
    return ReservoirTopology(n_qubits, std::move(loops), {}, count);
}

int ReservoirTopology::loop_count() const noexcept {
    return static_cast<int>(std::count(loops_.begin(), loops_.end(), true));
}

bool ReservoirTopology::has_edge(int i, int j) const noexcept {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

std::string ReservoirTopology::label() const {
    return fmt::format("{} loops + {} edges", loop_count(), edges_.size());
}

std::vector<ReservoirTopology> build_sequence(int n) {
    if (n < 2) throw std::invalid_argument(fmt::format("build_sequence: need n >= 2, got {}", n));

    std::vector<ReservoirTopology> seq;
    seq.reserve(static_cast<std::size_t>(1 + max_connections(n)));

    std::vector<bool> loops(static_cast<std::size_t>(n), false);
    std::vector<Edge> edges;
    auto emit = [&] {
        const int index = static_cast<int>(seq.size());
        seq.emplace_back(n, loops, edges, index);
    };

    emit();
    for (int q = 0; q < n; ++q) {
        loops[q] = true;
        emit();
    }

    auto add_edge = [&](int i, int j) {
        Edge e{std::min(i, j), std::max(i, j)};
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) return;
        edges.push_back(e);
        emit();
    };
    // On two qubits the cycle collapses to the single edge (0,1).
    for (int q = 0; q < n; ++q) add_edge(q, (q + 1) % n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) add_edge(i, j);
    }
    return seq;
}

double edge_density(const ReservoirTopology& t) noexcept {
    const auto present = t.loop_count() + static_cast<int>(t.edges().size());
    return static_cast<double>(present) / static_cast<double>(max_connections(t.n_qubits()));
}

namespace {

int parse_int_suffix(const std::string& selector, std::size_t offset) {
    int value = 0;
    const char* first = selector.data() + offset;
    const char* last = selector.data() + selector.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw std::invalid_argument(fmt::format("topology selector '{}': expected an integer", selector));
    }
    return value;
}

}  // namespace

ReservoirTopology resolve_topology(const std::string& selector, int n) {
    if (selector == "empty") return ReservoirTopology::empty(n);
    if (selector == "full") {
        auto seq = build_sequence(n);
        return seq.back();
    }
    if (selector.rfind("self-loops:", 0) == 0) {
        return ReservoirTopology::with_self_loops(n, parse_int_suffix(selector, 11));
    }
    if (selector.rfind("sequence:", 0) == 0) {
        const int index = parse_int_suffix(selector, 9);
        auto seq = build_sequence(n);
        if (index < 0 || index >= static_cast<int>(seq.size())) {
            throw std::invalid_argument(
                fmt::format("topology selector '{}': index outside [0, {}]", selector, seq.size() - 1));
        }
        return seq[static_cast<std::size_t>(index)];
    }
    throw std::invalid_argument(fmt::format("unknown topology selector '{}'", selector));
}

void to_json(nlohmann::json& j, const ReservoirTopology& t) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : t.edges()) edges.push_back({a, b});
    j = nlohmann::json{{"n", t.n_qubits()}, {"loops", t.self_loops()}, {"edges", std::move(edges)}};
}

ReservoirTopology topology_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    auto loops = j.at("loops").get<std::vector<bool>>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("topology json: edge must be [i, j]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return ReservoirTopology(n, std::move(loops), std::move(edges));
}

}  // namespace qrc
