#include "ovd/graphcore.hpp"

#include <algorithm>
#include <array>
#include <thread>

namespace ovd {

bool WeightedGraph::has_edge(int u, int v) const {
    auto span = neighbors(u);
    return std::binary_search(span.begin(), span.end(), v);
}

std::uint8_t WeightedGraph::edge_weight(int u, int v) const {
    auto span = neighbors(u);
    auto it = std::lower_bound(span.begin(), span.end(), v);
    if (it == span.end() || *it != v) return 0;
    return wgt[offsets[u] + (it - span.begin())];
}

WeightedGraph WeightedGraph::from_edges(int n, std::span<const EdgeSpec> edges) {
    WeightedGraph g;
    g.offsets.assign(n + 1, 0);
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v)
            throw ParameterError("bad edge endpoints");
        if (e.w != 1 && e.w != 3) throw ParameterError("edge weights must be 1 or 3");
        ++g.offsets[e.u + 1];
        ++g.offsets[e.v + 1];
        if (e.w != 1) g.unit_weights = false;
    }
    for (int u = 0; u < n; ++u) g.offsets[u + 1] += g.offsets[u];
    g.nbr.resize(g.offsets[n]);
    g.wgt.resize(g.offsets[n]);
    std::vector<std::int64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (const auto& e : edges) {
        g.nbr[cursor[e.u]] = e.v;
        g.wgt[cursor[e.u]++] = e.w;
        g.nbr[cursor[e.v]] = e.u;
        g.wgt[cursor[e.v]++] = e.w;
    }
    // Sort each adjacency range, carrying weights along.
    for (int u = 0; u < n; ++u) {
        auto b = g.offsets[u], e = g.offsets[u + 1];
        std::vector<std::pair<std::int32_t, std::uint8_t>> tmp;
        tmp.reserve(e - b);
        for (auto i = b; i < e; ++i) tmp.emplace_back(g.nbr[i], g.wgt[i]);
        std::sort(tmp.begin(), tmp.end());
        for (auto i = b; i < e; ++i) {
            g.nbr[i] = tmp[i - b].first;
            g.wgt[i] = tmp[i - b].second;
        }
        for (auto i = b + 1; i < e; ++i)
            if (g.nbr[i] == g.nbr[i - 1]) throw ParameterError("parallel edge");
    }
    return g;
}

namespace {

void check_source(const WeightedGraph& g, int source) {
    if (source < 0 || source >= g.vertex_count()) throw ParameterError("invalid source vertex");
}

void bfs(const WeightedGraph& g, std::span<const int> sources, std::vector<std::uint32_t>& dist) {
    std::vector<std::int32_t> frontier, next;
    for (int s : sources) {
        dist[s] = 0;
        frontier.push_back(s);
    }
    std::uint32_t d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (int u : frontier) {
            for (std::int32_t v : g.neighbors(u)) {
                if (dist[v] == kUnreachable) {
                    dist[v] = d;
                    next.push_back(v);
                }
            }
        }
        frontier.swap(next);
    }
}

// Label-setting with a rotating 4-slot bucket queue: with weights in {1,3}
// every tentative label lives within a window of 4 of the settled distance.
void dial(const WeightedGraph& g, std::span<const int> sources, std::vector<std::uint32_t>& dist) {
    std::array<std::vector<std::int32_t>, 4> buckets;
    std::size_t pending = 0;
    for (int s : sources) {
        dist[s] = 0;
        buckets[0].push_back(s);
        ++pending;
    }
    std::uint32_t d = 0;
    while (pending > 0) {
        auto& bucket = buckets[d & 3];
        while (!bucket.empty()) {
            int u = bucket.back();
            bucket.pop_back();
            --pending;
            if (dist[u] != d) continue;  // superseded entry
            const auto begin = g.offsets[u], end = g.offsets[u + 1];
            for (auto i = begin; i < end; ++i) {
                const int v = g.nbr[i];
                const std::uint32_t nd = d + g.wgt[i];
                if (nd < dist[v]) {
                    dist[v] = nd;
                    buckets[nd & 3].push_back(v);
                    ++pending;
                }
            }
        }
        ++d;
    }
}

void distances_into(const WeightedGraph& g, std::span<const int> sources,
                    std::vector<std::uint32_t>& dist) {
    dist.assign(g.vertex_count(), kUnreachable);
    if (g.unit_weights)
        bfs(g, sources, dist);
    else
        dial(g, sources, dist);
}

// Eccentricity plus the smallest vertex id attaining it.
std::pair<std::uint32_t, int> ecc_into(const WeightedGraph& g, int source,
                                       std::vector<std::uint32_t>& scratch) {
    int src[1] = {source};
    distances_into(g, src, scratch);
    std::uint32_t best = 0;
    int arg = source;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (scratch[v] == kUnreachable)
            throw DisconnectedError("vertex " + std::to_string(v) + " unreachable from " +
                                    std::to_string(source));
        if (scratch[v] > best) {
            best = scratch[v];
            arg = v;
        }
    }
    return {best, arg};
}

}  // namespace

DistanceVector shortest_paths_from(const WeightedGraph& g, int source) {
    check_source(g, source);
    DistanceVector out;
    out.source = source;
    int src[1] = {source};
    distances_into(g, src, out.dist);
    return out;
}

DistanceVector shortest_paths_multi(const WeightedGraph& g, std::span<const int> sources) {
    for (int s : sources) check_source(g, s);
    if (sources.empty()) throw ParameterError("need at least one source");
    DistanceVector out;
    out.source = sources.front();
    distances_into(g, sources, out.dist);
    return out;
}

std::optional<std::uint32_t> distance(const WeightedGraph& g, int u, int v) {
    check_source(g, u);
    check_source(g, v);
    auto dv = shortest_paths_from(g, u);
    if (dv.dist[v] == kUnreachable) return std::nullopt;
    return dv.dist[v];
}

std::uint32_t eccentricity(const WeightedGraph& g, int v) {
    check_source(g, v);
    std::vector<std::uint32_t> scratch;
    return ecc_into(g, v, scratch).first;
}

DiameterResult exact_diameter(const WeightedGraph& g, int threads) {
    const int n = g.vertex_count();
    if (n == 0) throw ParameterError("empty graph");
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, n);

    // Per-source results are reduced in source order, so the witness pair is
    // deterministic regardless of how the sweep is partitioned.
    std::vector<std::pair<std::uint32_t, int>> per_source(n);
    std::exception_ptr failure;

    auto work = [&](int begin, int end) {
        std::vector<std::uint32_t> scratch;
        try {
            for (int s = begin; s < end; ++s) per_source[s] = ecc_into(g, s, scratch);
        } catch (...) {
            failure = std::current_exception();
        }
    };

    if (threads == 1) {
        work(0, n);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (n + threads - 1) / threads;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(work, t * chunk, std::min(n, (t + 1) * chunk));
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    DiameterResult res;
    res.value = 0;
    for (int s = 0; s < n; ++s) {
        if (per_source[s].first > res.value) {
            res.value = per_source[s].first;
            res.witness = {s, per_source[s].second};
        }
    }
    return res;
}

ApproxDiameter approx2_diameter(const WeightedGraph& g, int start) {
    const std::uint32_t e = eccentricity(g, start);
    return {e, e, 2 * e};
}

}  // namespace ovd
