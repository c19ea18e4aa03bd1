#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ovd/errors.hpp"

namespace ovd {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

struct EdgeSpec {
    int u;
    int v;
    std::uint8_t w = 1;
};

/// Undirected graph in CSR form; edge weights restricted to {1, 3}.
struct WeightedGraph {
    std::vector<std::int64_t> offsets;  // size vertex_count + 1
    std::vector<std::int32_t> nbr;
    std::vector<std::uint8_t> wgt;
    bool unit_weights = true;

    int vertex_count() const { return static_cast<int>(offsets.size()) - 1; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(nbr.size()) / 2; }

    std::span<const std::int32_t> neighbors(int u) const {
        return {nbr.data() + offsets[u], nbr.data() + offsets[u + 1]};
    }

    /// Adjacency lists are sorted by neighbor id; lookup is a binary search.
    bool has_edge(int u, int v) const;
    std::uint8_t edge_weight(int u, int v) const;  // 0 when not adjacent

    static WeightedGraph from_edges(int n, std::span<const EdgeSpec> edges);
};

struct DistanceVector {
    int source = 0;
    std::vector<std::uint32_t> dist;
};

/// Exact single-source distances. Plain breadth-first search on unit-weight
/// graphs; a 4-slot rotating bucket queue handles the {1,3} weighted case.
DistanceVector shortest_paths_from(const WeightedGraph& g, int source);

/// Multi-source variant: dist is the distance to the nearest source.
DistanceVector shortest_paths_multi(const WeightedGraph& g, std::span<const int> sources);

std::optional<std::uint32_t> distance(const WeightedGraph& g, int u, int v);

/// Throws DisconnectedError if some vertex is unreachable from v.
std::uint32_t eccentricity(const WeightedGraph& g, int v);

struct DiameterResult {
    std::uint32_t value = 0;
    std::pair<int, int> witness{0, 0};  // smallest-id pair attaining the value
};

/// All-sources sweep; sources may be distributed over `threads` workers
/// (0 = hardware concurrency). The merged result is order-independent.
DiameterResult exact_diameter(const WeightedGraph& g, int threads = 0);

struct ApproxDiameter {
    std::uint32_t estimate = 0;  // eccentricity of the start vertex
    std::uint32_t lower = 0;     // = estimate
    std::uint32_t upper = 0;     // = 2 * estimate; true diameter lies in [lower, upper]
};

ApproxDiameter approx2_diameter(const WeightedGraph& g, int start = 0);

}  // namespace ovd
