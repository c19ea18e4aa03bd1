#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>
#include <string>

#include "ovd/construction.hpp"
#include "ovd/ovcore.hpp"

using namespace ovd;

namespace {

// Test-local edge oracle, written from first principles against the label
// semantics. Returns the expected weight of {x, y}, or 0 for non-adjacency.
int oracle_weight(const OvInstance& inst, Flavor flavor, const VertexLabel& x,
                  const VertexLabel& y) {
    auto bit = [&](int vec, int pos) { return inst.vectors[vec].bit(pos) == 1; };
    auto idx_eq = [](const VertexLabel& p, const VertexLabel& q) {
        return p.idx[0] == q.idx[0] && p.idx[1] == q.idx[1] && p.idx[2] == q.idx[2];
    };
    const Layer lx = x.layer, ly = y.layer;

    // Intra-layer cliques.
    if (lx == Layer::I && ly == Layer::I) return 1;
    if (lx == Layer::C && ly == Layer::C)
        return x.vec[0] == y.vec[0] && x.vec[1] == y.vec[1] ? 1 : 0;
    if ((lx == Layer::I || lx == Layer::Ip) && (ly == Layer::I || ly == Layer::Ip)) return 1;

    auto pair_rule = [&](const VertexLabel& a, const VertexLabel& b, Layer la, Layer lb) -> int {
        // Triple layers against the couple layer.
        if ((la == Layer::T || la == Layer::Tp) && lb == Layer::C) {
            if (a.vec[0] != b.vec[0] || a.vec[1] != b.vec[1]) return 0;
            for (int h = 0; h < 3; ++h)
                if (bit(a.vec[1], b.idx[h]) && bit(a.vec[2], b.idx[h])) return 1;
            return 0;
        }
        if (la == Layer::C && lb == Layer::P)
            return idx_eq(a, b) && (a.vec[0] == b.vec[0] || a.vec[0] == b.vec[1]) ? 1 : 0;
        if ((la == Layer::T || la == Layer::Tpp) && lb == Layer::I) {
            if (flavor == Flavor::Weighted ? la != Layer::T : la != Layer::Tpp) return 0;
            for (int f = 0; f < 2; ++f)
                for (int g = 0; g < 3; ++g)
                    if (!bit(a.vec[g], b.idx[f])) return 0;
            return flavor == Flavor::Weighted ? 3 : 1;
        }
        if (la == Layer::I && lb == Layer::P) {
            if (b.idx[0] != a.idx[2] || b.idx[1] != a.idx[3] || b.idx[2] != a.idx[4]) return 0;
            const int p1 = a.idx[0], p2 = a.idx[1];
            return (bit(b.vec[0], p1) && bit(b.vec[1], p2)) ||
                           (bit(b.vec[1], p1) && bit(b.vec[0], p2))
                       ? 1
                       : 0;
        }
        // Unweighted extras: the two matchings and the single-index layer.
        if (la == Layer::T && lb == Layer::Tp)
            return a.vec == b.vec ? 1 : 0;
        if (la == Layer::Tp && lb == Layer::Tpp)
            return a.vec == b.vec ? 1 : 0;
        if (la == Layer::Ip && lb == Layer::Tpp)
            return bit(b.vec[0], a.idx[0]) && bit(b.vec[1], a.idx[0]) ? 1 : 0;
        return -1;  // rule not oriented this way
    };

    int w = pair_rule(x, y, lx, ly);
    if (w < 0) w = pair_rule(y, x, ly, lx);
    return w < 0 ? 0 : w;
}

void check_against_oracle(const OvInstance& inst, Flavor flavor) {
    const auto g = build_gadget(inst, flavor);
    const int n = g.vertex_count();
    std::int64_t oracle_edges = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int expected = oracle_weight(inst, flavor, g.labels[u], g.labels[v]);
            const int actual = g.core.edge_weight(u, v);
            if (expected != actual) {
                CAPTURE(g.labels[u].to_string());
                CAPTURE(g.labels[v].to_string());
                CHECK(expected == actual);
                return;
            }
            if (expected > 0) ++oracle_edges;
        }
    CHECK(oracle_edges == g.edge_count());
}

}  // namespace

TEST_CASE("vertex predicates on a hand instance") {
    // Vectors: 0 = 111, 1 = 110, 2 = 101.
    const auto inst = OvInstance::from_strings({"111", "110", "101"});
    CHECK(exists_C(inst, 0, 1, 1, 2, 3));   // 111 all ones, maj(1,1,0) = 1
    CHECK_FALSE(exists_C(inst, 1, 2, 1, 2, 3));  // 110 has no 1 at position 3
    CHECK_FALSE(exists_C(inst, 0, 2, 2, 2, 3));  // maj(0,0,1) = 0
    CHECK(exists_P(inst, 1, 2, 1, 1, 1));
    CHECK_FALSE(exists_P(inst, 1, 2, 1, 1, 2));  // 101 is 0 at position 2
}

TEST_CASE("frozen counts for the reference instance") {
    const auto inst = OvInstance::from_strings({"111", "110", "101"});
    const auto g = build_gadget(inst, Flavor::Weighted);
    const auto s = count_summary(g);
    CHECK(s.layer_counts.at("T") == 6);
    CHECK(s.layer_counts.at("C") == 64);
    CHECK(s.layer_counts.at("P") == 60);
    CHECK(s.layer_counts.at("I") == 243);
    CHECK(s.identities_ok);

    const auto gu = build_gadget(inst, Flavor::Unweighted);
    const auto su = count_summary(gu);
    CHECK(su.layer_counts.at("T'") == 6);
    CHECK(su.layer_counts.at("T''") == 6);
    CHECK(su.layer_counts.at("I'") == 3);
    CHECK(su.identities_ok);
}

TEST_CASE("builder agrees with the quadratic edge oracle") {
    const auto hand = OvInstance::from_strings({"111", "110", "101"});
    check_against_oracle(hand, Flavor::Weighted);
    check_against_oracle(hand, Flavor::Unweighted);

    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const auto inst = gen_random(4, 3, 0.7, seed);
        if (inst.n() < 3) continue;
        check_against_oracle(inst, Flavor::Weighted);
        check_against_oracle(inst, Flavor::Unweighted);
    }
}

TEST_CASE("vertex ids follow layer order with lexicographic interiors") {
    const auto inst = OvInstance::from_strings({"111", "110", "101"});
    const auto g = build_gadget(inst, Flavor::Weighted);
    CHECK(g.range(Layer::T).begin == 0);
    CHECK(g.range(Layer::T).end == g.range(Layer::C).begin);
    CHECK(g.range(Layer::C).end == g.range(Layer::P).begin);
    CHECK(g.range(Layer::P).end == g.range(Layer::I).begin);
    CHECK(g.range(Layer::I).end == g.vertex_count());
    // First triple is (0,1,2) in instance order.
    CHECK(g.labels[0].vec == std::array<std::uint8_t, 3>{0, 1, 2});
    // Lookup inverts labeling.
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.find(g.labels[v]) == v);
    CHECK(g.find(VertexLabel::index1(1)) == -1);  // no I' layer in the weighted flavor
}

TEST_CASE("size guard rejects oversized builds before allocation") {
    const auto inst = OvInstance::from_strings({"1111111", "1110111", "1011111"});
    BuildLimits limits;
    limits.max_l = 6;
    CHECK_THROWS_AS(build_gadget(inst, Flavor::Weighted, limits), SizeGuardError);
    limits.max_l = 8;
    limits.max_edges = 100;
    CHECK_THROWS_AS(build_gadget(inst, Flavor::Weighted, limits), SizeGuardError);
}

TEST_CASE("size prediction upper-bounds reality") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto inst = gen_random(5, 4, 0.6, seed);
        for (Flavor flavor : {Flavor::Weighted, Flavor::Unweighted}) {
            const auto pred = predict_size(inst.n(), inst.l, flavor);
            const auto g = build_gadget(inst, flavor);
            CHECK(g.vertex_count() <= pred.vertices);
            CHECK(g.edge_count() <= pred.edges);
        }
    }
}

TEST_CASE("graph file round-trip is bit-exact") {
    const auto inst = OvInstance::from_strings({"1101", "1011", "1111"});
    for (Flavor flavor : {Flavor::Weighted, Flavor::Unweighted}) {
        const auto g = build_gadget(inst, flavor);
        std::ostringstream first;
        write_graph(first, g);
        std::istringstream in(first.str());
        const auto h = read_graph(in);
        CHECK(h.flavor == g.flavor);
        CHECK(h.labels == g.labels);
        CHECK(h.core.nbr == g.core.nbr);
        CHECK(h.core.wgt == g.core.wgt);
        std::ostringstream second;
        write_graph(second, h);
        CHECK(first.str() == second.str());
    }
}

TEST_CASE("graph parser rejects malformed files") {
    std::istringstream bad_header("p gadget weighted x 0\n");
    CHECK_THROWS_AS(read_graph(bad_header), ParseError);
    std::istringstream bad_edge(
        "p gadget weighted 2 1\nv 0 I' 1\nv 1 I' 2\ne 1 0 1\n");
    CHECK_THROWS_AS(read_graph(bad_edge), ParseError);  // requires u < v
}
