#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <queue>
#include <random>
#include <vector>

#include "ovd/graphcore.hpp"

using namespace ovd;

namespace {

// Reference Dijkstra with a binary heap, independent of the bucket queue.
std::vector<std::uint32_t> dijkstra(const WeightedGraph& g, int source) {
    std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
    using Item = std::pair<std::uint32_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[source] = 0;
    pq.emplace(0u, source);
    while (!pq.empty()) {
        const auto [d, u] = pq.top();
        pq.pop();
        if (d != dist[u]) continue;
        for (std::int64_t i = g.offsets[u]; i < g.offsets[u + 1]; ++i) {
            const int v = g.nbr[i];
            const std::uint32_t nd = d + g.wgt[i];
            if (nd < dist[v]) {
                dist[v] = nd;
                pq.emplace(nd, v);
            }
        }
    }
    return dist;
}

WeightedGraph random_graph(int n, double p, bool mixed_weights, std::mt19937_64& rng) {
    std::vector<EdgeSpec> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p)
                edges.push_back({u, v, static_cast<std::uint8_t>(
                                           mixed_weights && coin(rng) < 0.4 ? 3 : 1)});
    return WeightedGraph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("csr adjacency and edge lookup") {
    const EdgeSpec edges[] = {{0, 1, 1}, {1, 2, 3}, {0, 3, 1}};
    const auto g = WeightedGraph::from_edges(4, edges);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.edge_weight(1, 2) == 3);
    CHECK(g.edge_weight(2, 0) == 0);
    CHECK_FALSE(g.unit_weights);
}

TEST_CASE("parallel edges are rejected") {
    const EdgeSpec edges[] = {{0, 1, 1}, {1, 0, 1}};
    CHECK_THROWS(WeightedGraph::from_edges(2, edges));
}

TEST_CASE("shortest paths on a hand-built mixed-weight graph") {
    // 0 -1- 1 -3- 2 and the shortcut 0 -1- 3 -1- 2.
    const EdgeSpec edges[] = {{0, 1, 1}, {1, 2, 3}, {0, 3, 1}, {3, 2, 1}};
    const auto g = WeightedGraph::from_edges(4, edges);
    const auto dv = shortest_paths_from(g, 0);
    CHECK(dv.dist[0] == 0);
    CHECK(dv.dist[1] == 1);
    CHECK(dv.dist[2] == 2);  // via vertex 3, not the weight-3 edge
    CHECK(dv.dist[3] == 1);
}

TEST_CASE("bucket queue agrees with heap dijkstra on random graphs") {
    std::mt19937_64 rng(20240821);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 40);
        const auto g = random_graph(n, 0.15, trial % 2 == 0, rng);
        const int s = static_cast<int>(rng() % n);
        const auto fast = shortest_paths_from(g, s);
        const auto slow = dijkstra(g, s);
        CHECK(fast.dist == slow);
    }
}

TEST_CASE("multi-source is the pointwise minimum of single sources") {
    std::mt19937_64 rng(7);
    const auto g = random_graph(25, 0.2, true, rng);
    const int sources[] = {0, 7, 13};
    const auto multi = shortest_paths_multi(g, sources);
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::uint32_t best = kUnreachable;
        for (int s : sources) best = std::min(best, dijkstra(g, s)[v]);
        CHECK(multi.dist[v] == best);
    }
}

TEST_CASE("eccentricity and diameter on a path graph") {
    std::vector<EdgeSpec> edges;
    for (int i = 0; i < 5; ++i) edges.push_back({i, i + 1, 1});
    const auto g = WeightedGraph::from_edges(6, edges);
    CHECK(eccentricity(g, 0) == 5);
    CHECK(eccentricity(g, 3) == 3);
    const auto d = exact_diameter(g, 1);
    CHECK(d.value == 5);
    CHECK(d.witness == std::pair<int, int>{0, 5});
}

TEST_CASE("disconnected graphs are detected") {
    const EdgeSpec edges[] = {{0, 1, 1}, {2, 3, 1}};
    const auto g = WeightedGraph::from_edges(4, edges);
    CHECK_THROWS_AS(eccentricity(g, 0), DisconnectedError);
    CHECK_FALSE(distance(g, 0, 3).has_value());
    CHECK(*distance(g, 2, 3) == 1);
}

TEST_CASE("threaded diameter matches single-threaded") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        WeightedGraph g = random_graph(40, 0.3, true, rng);
        // Retry until connected; density 0.3 on 40 vertices rarely fails.
        bool connected = true;
        try {
            eccentricity(g, 0);
        } catch (const DisconnectedError&) {
            connected = false;
        }
        if (!connected) continue;
        const auto a = exact_diameter(g, 1);
        const auto b = exact_diameter(g, 4);
        CHECK(a.value == b.value);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("approx2 brackets the true diameter") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = random_graph(30, 0.35, trial % 2 == 1, rng);
        try {
            const auto exact = exact_diameter(g, 1);
            const auto approx = approx2_diameter(g, 0);
            CHECK(approx.lower <= exact.value);
            CHECK(exact.value <= approx.upper);
            CHECK(approx.upper == 2 * approx.estimate);
        } catch (const DisconnectedError&) {
            continue;
        }
    }
}
