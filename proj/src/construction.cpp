#include "ovd/construction.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ovd {

namespace {

std::uint64_t vec_mask(const OvInstance& inst, int v) { return inst.vectors[v].mask(); }

int bit_at(const OvInstance& inst, int v, int i) { return inst.vectors[v].bit(i); }

std::int64_t binom2(std::int64_t x) { return x * (x - 1) / 2; }

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

std::string_view layer_name(Layer layer) {
    switch (layer) {
        case Layer::T: return "T";
        case Layer::C: return "C";
        case Layer::P: return "P";
        case Layer::I: return "I";
        case Layer::Tp: return "T'";
        case Layer::Tpp: return "T''";
        case Layer::Ip: return "I'";
    }
    return "?";
}

std::string_view flavor_name(Flavor flavor) {
    return flavor == Flavor::Weighted ? "weighted" : "unweighted";
}

std::uint64_t VertexLabel::encode() const {
    std::uint64_t code = static_cast<std::uint64_t>(layer);
    for (auto v : vec) code = (code << 8) | v;
    for (auto i : idx) code = (code << 7) | i;
    return code;
}

std::string VertexLabel::to_string() const {
    std::ostringstream os;
    os << layer_name(layer);
    os << '(';
    bool first = true;
    auto emit = [&](int x) {
        if (!first) os << ',';
        first = false;
        os << x;
    };
    switch (layer) {
        case Layer::T:
        case Layer::Tp:
        case Layer::Tpp:
            for (int f = 0; f < 3; ++f) emit(vec[f] + 1);
            break;
        case Layer::C:
        case Layer::P:
            for (int f = 0; f < 2; ++f) emit(vec[f] + 1);
            for (int f = 0; f < 3; ++f) emit(idx[f]);
            break;
        case Layer::I:
            for (int f = 0; f < 5; ++f) emit(idx[f]);
            break;
        case Layer::Ip:
            emit(idx[0]);
            break;
    }
    os << ')';
    return os.str();
}

VertexLabel VertexLabel::triple(Layer layer, int a, int b, int c) {
    VertexLabel v;
    v.layer = layer;
    v.vec = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
             static_cast<std::uint8_t>(c)};
    return v;
}

VertexLabel VertexLabel::couple(int a, int b, int i, int j, int k) {
    VertexLabel v;
    v.layer = Layer::C;
    v.vec = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), 0};
    v.idx = {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j),
             static_cast<std::uint8_t>(k), 0, 0};
    return v;
}

VertexLabel VertexLabel::pair(int a, int b, int i, int j, int k) {
    VertexLabel v = couple(std::min(a, b), std::max(a, b), i, j, k);
    v.layer = Layer::P;
    return v;
}

VertexLabel VertexLabel::index5(int p1, int p2, int i, int j, int k) {
    VertexLabel v;
    v.layer = Layer::I;
    v.idx = {static_cast<std::uint8_t>(p1), static_cast<std::uint8_t>(p2),
             static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j),
             static_cast<std::uint8_t>(k)};
    return v;
}

VertexLabel VertexLabel::index1(int i) {
    VertexLabel v;
    v.layer = Layer::Ip;
    v.idx = {static_cast<std::uint8_t>(i), 0, 0, 0, 0};
    return v;
}

int GadgetGraph::find(const VertexLabel& label) const {
    auto it = index_of.find(label.encode());
    return it == index_of.end() ? -1 : it->second;
}

SizePrediction predict_size(int n, int l, Flavor flavor) {
    const std::int64_t nn = n, ll = l;
    const std::int64_t nT = nn * (nn - 1) * (nn - 2);
    const std::int64_t ubC = nn * (nn - 1) * ipow(ll, 3);
    const std::int64_t ubP = nn * (nn + 1) / 2 * ipow(ll, 3);
    const std::int64_t nI = ipow(ll, 5);

    SizePrediction p;
    p.vertices = nT + ubC + ubP + nI;
    p.edges = binom2(nI)                       // clique inside I
              + nn * (nn - 1) * binom2(ipow(ll, 3))  // index switching inside C
              + nT * ipow(ll, 3)               // T-C
              + ubC * nn                       // C-P
              + nT * nI                        // T-I (or T''-I)
              + ubP * ll * ll;                 // I-P
    if (flavor == Flavor::Unweighted) {
        p.vertices += 2 * nT + ll;
        p.edges += 2 * nT            // matchings
                   + nT * ipow(ll, 3)  // T'-C
                   + binom2(ll)      // clique inside I'
                   + nI * ll         // I x I'
                   + nT * ll;        // I'-T''
    }
    return p;
}

bool exists_C(const OvInstance& inst, int a, int b, int i, int j, int k) {
    if (a == b) return false;
    return bit_at(inst, a, i) && bit_at(inst, a, j) && bit_at(inst, a, k) &&
           maj3(bit_at(inst, b, i), bit_at(inst, b, j), bit_at(inst, b, k));
}

bool exists_P(const OvInstance& inst, int a, int b, int i, int j, int k) {
    for (int h : {i, j, k})
        if (!bit_at(inst, a, h) || !bit_at(inst, b, h)) return false;
    return true;
}

bool edge_TC(const OvInstance& inst, const VertexLabel& t, const VertexLabel& cvert) {
    if (t.vec[0] != cvert.vec[0] || t.vec[1] != cvert.vec[1]) return false;
    for (int f = 0; f < 3; ++f) {
        const int h = cvert.idx[f];
        if (bit_at(inst, t.vec[1], h) && bit_at(inst, t.vec[2], h)) return true;
    }
    return false;
}

bool edge_CP(const OvInstance&, const VertexLabel& cvert, const VertexLabel& pvert) {
    if (cvert.idx[0] != pvert.idx[0] || cvert.idx[1] != pvert.idx[1] ||
        cvert.idx[2] != pvert.idx[2])
        return false;
    return cvert.vec[0] == pvert.vec[0] || cvert.vec[0] == pvert.vec[1];
}

bool edge_TI(const OvInstance& inst, const VertexLabel& t, const VertexLabel& ivert) {
    for (int f = 0; f < 2; ++f) {
        const int p = ivert.idx[f];
        for (int g = 0; g < 3; ++g)
            if (!bit_at(inst, t.vec[g], p)) return false;
    }
    return true;
}

bool edge_IP(const OvInstance& inst, const VertexLabel& ivert, const VertexLabel& pvert) {
    if (ivert.idx[2] != pvert.idx[0] || ivert.idx[3] != pvert.idx[1] ||
        ivert.idx[4] != pvert.idx[2])
        return false;
    const int a = pvert.vec[0], b = pvert.vec[1];
    const int p1 = ivert.idx[0], p2 = ivert.idx[1];
    return (bit_at(inst, a, p1) && bit_at(inst, b, p2)) ||
           (bit_at(inst, a, p2) && bit_at(inst, b, p1));
}

bool edge_IpTpp(const OvInstance& inst, const VertexLabel& ip, const VertexLabel& t) {
    const int i = ip.idx[0];
    return bit_at(inst, t.vec[0], i) && bit_at(inst, t.vec[1], i);
}

namespace {

class Builder {
public:
    Builder(const OvInstance& inst, Flavor flavor, const BuildLimits& limits)
        : inst_(inst), flavor_(flavor), n_(inst.n()), l_(inst.l) {
        if (n_ < 3) throw ParameterError("gadget construction needs n >= 3");
        if (l_ > limits.max_l) {
            auto p = predict_size(n_, l_, flavor);
            throw SizeGuardError("dimension l = " + std::to_string(l_) +
                                     " exceeds cap " + std::to_string(limits.max_l) +
                                     " (predicted <= " + std::to_string(p.vertices) +
                                     " vertices, " + std::to_string(p.edges) + " edges)",
                                 p.vertices, p.edges);
        }
        if (limits.max_edges >= 0) {
            auto p = predict_size(n_, l_, flavor);
            if (p.edges > limits.max_edges)
                throw SizeGuardError("predicted edge count " + std::to_string(p.edges) +
                                         " exceeds budget " + std::to_string(limits.max_edges) +
                                         " (predicted vertices " + std::to_string(p.vertices) + ")",
                                     p.vertices, p.edges);
        }
    }

    GadgetGraph build() {
        enumerate_vertices();
        enumerate_edges();
        GadgetGraph out;
        out.flavor = flavor_;
        out.l = l_;
        out.num_vectors = n_;
        out.labels = std::move(labels_);
        out.layers = layers_;
        out.core = WeightedGraph::from_edges(static_cast<int>(out.labels.size()), edges_);
        out.index_of.reserve(out.labels.size());
        for (int v = 0; v < static_cast<int>(out.labels.size()); ++v)
            out.index_of.emplace(out.labels[v].encode(), v);
        return out;
    }

private:
    void add(const VertexLabel& label) { labels_.push_back(label); }

    void enumerate_vertices() {
        auto mark = [&](Layer layer, auto&& fill) {
            layers_[static_cast<int>(layer)].begin = static_cast<int>(labels_.size());
            fill();
            layers_[static_cast<int>(layer)].end = static_cast<int>(labels_.size());
        };
        auto fill_triples = [&](Layer layer) {
            for (int a = 0; a < n_; ++a)
                for (int b = 0; b < n_; ++b)
                    for (int c = 0; c < n_; ++c)
                        if (a != b && a != c && b != c) add(VertexLabel::triple(layer, a, b, c));
        };
        mark(Layer::T, [&] { fill_triples(Layer::T); });
        mark(Layer::C, [&] {
            for (int a = 0; a < n_; ++a)
                for (int b = 0; b < n_; ++b) {
                    if (a == b) continue;
                    for (int i = 1; i <= l_; ++i)
                        for (int j = 1; j <= l_; ++j)
                            for (int k = 1; k <= l_; ++k)
                                if (exists_C(inst_, a, b, i, j, k))
                                    add(VertexLabel::couple(a, b, i, j, k));
                }
        });
        mark(Layer::P, [&] {
            for (int a = 0; a < n_; ++a)
                for (int b = a; b < n_; ++b)
                    for (int i = 1; i <= l_; ++i)
                        for (int j = 1; j <= l_; ++j)
                            for (int k = 1; k <= l_; ++k)
                                if (exists_P(inst_, a, b, i, j, k))
                                    add(VertexLabel::pair(a, b, i, j, k));
        });
        mark(Layer::I, [&] {
            for (int p1 = 1; p1 <= l_; ++p1)
                for (int p2 = 1; p2 <= l_; ++p2)
                    for (int i = 1; i <= l_; ++i)
                        for (int j = 1; j <= l_; ++j)
                            for (int k = 1; k <= l_; ++k)
                                add(VertexLabel::index5(p1, p2, i, j, k));
        });
        if (flavor_ == Flavor::Unweighted) {
            mark(Layer::Tp, [&] { fill_triples(Layer::Tp); });
            mark(Layer::Tpp, [&] { fill_triples(Layer::Tpp); });
            mark(Layer::Ip, [&] {
                for (int i = 1; i <= l_; ++i) add(VertexLabel::index1(i));
            });
        } else {
            const int end = static_cast<int>(labels_.size());
            for (auto layer : {Layer::Tp, Layer::Tpp, Layer::Ip})
                layers_[static_cast<int>(layer)] = {end, end};
        }
    }

    // Vertex id of (p1,p2,i,j,k) in the contiguous I block.
    int i_id(int p1, int p2, int i, int j, int k) const {
        const int base = layers_[static_cast<int>(Layer::I)].begin;
        return base + ((((p1 - 1) * l_ + (p2 - 1)) * l_ + (i - 1)) * l_ + (j - 1)) * l_ + (k - 1);
    }

    // Rank of an ordered pairwise-distinct triple in lexicographic order.
    int triple_rank(int a, int b, int c) const {
        const int bb = b - (b > a ? 1 : 0);
        int cc = c;
        cc -= (c > a ? 1 : 0) + (c > b ? 1 : 0);
        return (a * (n_ - 1) + bb) * (n_ - 2) + cc;
    }

    void edge(int u, int v, std::uint8_t w = 1) { edges_.push_back({u, v, w}); }

    void enumerate_edges() {
        const auto& rC = layers_[static_cast<int>(Layer::C)];
        const auto& rP = layers_[static_cast<int>(Layer::P)];
        const auto& rI = layers_[static_cast<int>(Layer::I)];
        const int baseT = layers_[static_cast<int>(Layer::T)].begin;
        const bool unweighted = flavor_ == Flavor::Unweighted;

        // Temporary id lookup for the existence-filtered layers C and P.
        std::unordered_map<std::uint64_t, int> lookup;
        for (int v = rC.begin; v < rC.end; ++v) lookup.emplace(labels_[v].encode(), v);
        for (int v = rP.begin; v < rP.end; ++v) lookup.emplace(labels_[v].encode(), v);
        auto find = [&](const VertexLabel& lab) {
            auto it = lookup.find(lab.encode());
            return it == lookup.end() ? -1 : it->second;
        };

        // Index-switching cliques inside C: one clique per ordered vector pair,
        // and those blocks are contiguous by construction.
        for (int begin = rC.begin; begin < rC.end;) {
            int end = begin;
            while (end < rC.end && labels_[end].vec[0] == labels_[begin].vec[0] &&
                   labels_[end].vec[1] == labels_[begin].vec[1])
                ++end;
            for (int u = begin; u < end; ++u)
                for (int v = u + 1; v < end; ++v) edge(u, v);
            begin = end;
        }

        // Clique inside I.
        for (int u = rI.begin; u < rI.end; ++u)
            for (int v = u + 1; v < rI.end; ++v) edge(u, v);

        // T-C (and T'-C in the unweighted flavor): iterate C vertices and
        // candidate third vector fields.
        const int baseTp = layers_[static_cast<int>(Layer::Tp)].begin;
        for (int cv = rC.begin; cv < rC.end; ++cv) {
            const auto& lab = labels_[cv];
            const int a = lab.vec[0], b = lab.vec[1];
            std::uint64_t hmask = 0;
            for (int f = 0; f < 3; ++f) hmask |= 1ull << (lab.idx[f] - 1);
            hmask &= vec_mask(inst_, b);
            for (int c = 0; c < n_; ++c) {
                if (c == a || c == b) continue;
                if ((hmask & vec_mask(inst_, c)) == 0) continue;
                const int rank = triple_rank(a, b, c);
                edge(baseT + rank, cv);
                if (unweighted) edge(baseTp + rank, cv);
            }
        }

        // C-P: same index triple, first vector field of C in the pair.
        for (int cv = rC.begin; cv < rC.end; ++cv) {
            const auto& lab = labels_[cv];
            for (int x = 0; x < n_; ++x) {
                const int pv = find(VertexLabel::pair(lab.vec[0], x, lab.idx[0], lab.idx[1], lab.idx[2]));
                if (pv >= 0) edge(cv, pv);
            }
        }

        // T-I at weight 3, or T''-I at weight 1 after the split.
        {
            const int baseTpp = layers_[static_cast<int>(Layer::Tpp)].begin;
            const int l3 = l_ * l_ * l_;
            int rank = 0;
            for (int a = 0; a < n_; ++a)
                for (int b = 0; b < n_; ++b)
                    for (int c = 0; c < n_; ++c) {
                        if (a == b || a == c || b == c) continue;
                        const int t = (unweighted ? baseTpp : baseT) + rank++;
                        std::uint64_t common =
                            vec_mask(inst_, a) & vec_mask(inst_, b) & vec_mask(inst_, c);
                        for (std::uint64_t m1 = common; m1; m1 &= m1 - 1) {
                            const int p1 = std::countr_zero(m1) + 1;
                            for (std::uint64_t m2 = common; m2; m2 &= m2 - 1) {
                                const int p2 = std::countr_zero(m2) + 1;
                                const int block = i_id(p1, p2, 1, 1, 1);
                                for (int off = 0; off < l3; ++off)
                                    edge(t, block + off, unweighted ? 1 : 3);
                            }
                        }
                    }
        }

        // I-P.
        for (int pv = rP.begin; pv < rP.end; ++pv) {
            const auto& lab = labels_[pv];
            const std::uint64_t ma = vec_mask(inst_, lab.vec[0]);
            const std::uint64_t mb = vec_mask(inst_, lab.vec[1]);
            for (int p1 = 1; p1 <= l_; ++p1)
                for (int p2 = 1; p2 <= l_; ++p2) {
                    const bool fwd = ((ma >> (p1 - 1)) & (mb >> (p2 - 1)) & 1) != 0;
                    const bool rev = ((ma >> (p2 - 1)) & (mb >> (p1 - 1)) & 1) != 0;
                    if (fwd || rev) edge(i_id(p1, p2, lab.idx[0], lab.idx[1], lab.idx[2]), pv);
                }
        }

        if (!unweighted) return;

        const auto& rTp = layers_[static_cast<int>(Layer::Tp)];
        const auto& rTpp = layers_[static_cast<int>(Layer::Tpp)];
        const auto& rIp = layers_[static_cast<int>(Layer::Ip)];
        const int nT = rTp.size();

        // Perfect matchings T-T' and T'-T''.
        for (int r = 0; r < nT; ++r) {
            edge(baseT + r, rTp.begin + r);
            edge(rTp.begin + r, rTpp.begin + r);
        }

        // I'-T'': first two vector fields both 1 at the I' index.
        for (int r = 0; r < nT; ++r) {
            const auto& lab = labels_[rTpp.begin + r];
            std::uint64_t common = vec_mask(inst_, lab.vec[0]) & vec_mask(inst_, lab.vec[1]);
            for (std::uint64_t m = common; m; m &= m - 1)
                edge(rIp.begin + std::countr_zero(m), rTpp.begin + r);
        }

        // Turn I union I' into a clique: switching edges inside I', plus
        // full adjacency between I and I'.
        for (int u = rIp.begin; u < rIp.end; ++u)
            for (int v = u + 1; v < rIp.end; ++v) edge(u, v);
        for (int u = rI.begin; u < rI.end; ++u)
            for (int v = rIp.begin; v < rIp.end; ++v) edge(u, v);
    }

    const OvInstance& inst_;
    Flavor flavor_;
    int n_;
    int l_;
    std::vector<VertexLabel> labels_;
    std::array<LayerRange, 7> layers_{};
    std::vector<EdgeSpec> edges_;
};

}  // namespace

GadgetGraph build_weighted(const OvInstance& inst, const BuildLimits& limits) {
    return Builder(inst, Flavor::Weighted, limits).build();
}

GadgetGraph build_unweighted(const OvInstance& inst, const BuildLimits& limits) {
    return Builder(inst, Flavor::Unweighted, limits).build();
}

GadgetGraph build_gadget(const OvInstance& inst, Flavor flavor, const BuildLimits& limits) {
    return Builder(inst, flavor, limits).build();
}

std::string edge_class_key(Layer a, Layer b) {
    if (static_cast<int>(a) > static_cast<int>(b)) std::swap(a, b);
    return std::string(layer_name(a)) + "-" + std::string(layer_name(b));
}

CountSummary count_summary(const GadgetGraph& g) {
    CountSummary s;
    s.flavor = g.flavor;
    s.num_vectors = g.num_vectors;
    s.l = g.l;
    for (int li = 0; li < 7; ++li) {
        const auto& r = g.layers[li];
        if (li >= 4 && g.flavor == Flavor::Weighted) continue;
        s.layer_counts[std::string(layer_name(static_cast<Layer>(li)))] = r.size();
    }
    for (int u = 0; u < g.vertex_count(); ++u)
        for (std::int32_t v : g.core.neighbors(u))
            if (u < v) ++s.edge_counts[edge_class_key(g.layer_of(u), g.layer_of(v))];

    const std::int64_t n = g.num_vectors, l = g.l;
    auto expect = [&](Layer layer, std::int64_t want) {
        const std::int64_t got = g.range(layer).size();
        if (got != want) {
            s.identities_ok = false;
            s.identity_failures.push_back(std::string(layer_name(layer)) + ": got " +
                                          std::to_string(got) + ", expected " +
                                          std::to_string(want));
        }
    };
    expect(Layer::T, n * (n - 1) * (n - 2));
    expect(Layer::I, ipow(l, 5));
    if (g.flavor == Flavor::Unweighted) {
        expect(Layer::Tp, n * (n - 1) * (n - 2));
        expect(Layer::Tpp, n * (n - 1) * (n - 2));
        expect(Layer::Ip, l);
    }
    return s;
}

namespace {

Layer layer_from_name(std::string_view name) {
    for (int li = 0; li < 7; ++li)
        if (layer_name(static_cast<Layer>(li)) == name) return static_cast<Layer>(li);
    throw ParseError("unknown layer '" + std::string(name) + "'", 0);
}

}  // namespace

GadgetGraph read_graph(std::istream& in) {
    std::string tok;
    if (!(in >> tok) || tok != "p") throw ParseError("expected 'p' header", 1);
    if (!(in >> tok) || tok != "gadget") throw ParseError("expected 'gadget' format tag", 1);
    std::string flavor_tok;
    std::int64_t nv = 0, ne = 0;
    if (!(in >> flavor_tok >> nv >> ne)) throw ParseError("bad header counts", 1);

    GadgetGraph g;
    if (flavor_tok == "weighted")
        g.flavor = Flavor::Weighted;
    else if (flavor_tok == "unweighted")
        g.flavor = Flavor::Unweighted;
    else
        throw ParseError("unknown flavor '" + flavor_tok + "'", 1);

    g.labels.resize(nv);
    std::vector<EdgeSpec> edges;
    edges.reserve(ne);
    std::vector<bool> seen(nv, false);

    int lineno = 1;
    while (in >> tok) {
        ++lineno;
        if (tok == "v") {
            std::int64_t id;
            std::string lname;
            if (!(in >> id >> lname)) throw ParseError("bad vertex line", lineno);
            if (id < 0 || id >= nv) throw ParseError("vertex id out of range", lineno);
            VertexLabel lab;
            lab.layer = layer_from_name(lname);
            auto read_fields = [&](int nvec, int nidx) {
                for (int f = 0; f < nvec; ++f) {
                    int x;
                    if (!(in >> x) || x < 1) throw ParseError("bad vector field", lineno);
                    lab.vec[f] = static_cast<std::uint8_t>(x - 1);
                }
                for (int f = 0; f < nidx; ++f) {
                    int x;
                    if (!(in >> x) || x < 1) throw ParseError("bad index field", lineno);
                    lab.idx[f] = static_cast<std::uint8_t>(x);
                }
            };
            switch (lab.layer) {
                case Layer::T:
                case Layer::Tp:
                case Layer::Tpp: read_fields(3, 0); break;
                case Layer::C:
                case Layer::P: read_fields(2, 3); break;
                case Layer::I: read_fields(0, 5); break;
                case Layer::Ip: read_fields(0, 1); break;
            }
            g.labels[id] = lab;
            seen[id] = true;
        } else if (tok == "e") {
            std::int64_t u, v;
            int w;
            if (!(in >> u >> v >> w)) throw ParseError("bad edge line", lineno);
            if (u < 0 || v < 0 || u >= nv || v >= nv || u >= v)
                throw ParseError("edge endpoints must satisfy 0 <= u < v < n", lineno);
            if (w != 1 && w != 3) throw ParseError("edge weight must be 1 or 3", lineno);
            edges.push_back({static_cast<int>(u), static_cast<int>(v), static_cast<std::uint8_t>(w)});
        } else {
            throw ParseError("unexpected token '" + tok + "'", lineno);
        }
    }
    for (std::int64_t id = 0; id < nv; ++id)
        if (!seen[id]) throw ParseError("missing vertex " + std::to_string(id), lineno);
    if (static_cast<std::int64_t>(edges.size()) != ne)
        throw ParseError("edge count mismatch: header says " + std::to_string(ne) + ", found " +
                             std::to_string(edges.size()),
                         lineno);

    // Rebuild layer ranges; ids must come grouped in the canonical layer order.
    int cursor = 0;
    for (int li = 0; li < 7; ++li) {
        auto& r = g.layers[li];
        r.begin = cursor;
        while (cursor < nv && g.labels[cursor].layer == static_cast<Layer>(li)) ++cursor;
        r.end = cursor;
    }
    if (cursor != nv) throw ParseError("vertices are not grouped in layer order", lineno);

    g.core = WeightedGraph::from_edges(static_cast<int>(nv), edges);
    g.index_of.reserve(nv);
    for (int v = 0; v < nv; ++v) g.index_of.emplace(g.labels[v].encode(), v);

    for (const auto& lab : g.labels) {
        for (int f = 0; f < 3; ++f) g.num_vectors = std::max(g.num_vectors, lab.vec[f] + 1);
        for (int f = 0; f < 5; ++f) g.l = std::max<int>(g.l, lab.idx[f]);
    }
    return g;
}

void write_graph(std::ostream& out, const GadgetGraph& g) {
    out << "p gadget " << flavor_name(g.flavor) << ' ' << g.vertex_count() << ' ' << g.edge_count()
        << '\n';
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& lab = g.labels[v];
        out << "v " << v << ' ' << layer_name(lab.layer);
        int nvec = 0, nidx = 0;
        switch (lab.layer) {
            case Layer::T:
            case Layer::Tp:
            case Layer::Tpp: nvec = 3; break;
            case Layer::C:
            case Layer::P:
                nvec = 2;
                nidx = 3;
                break;
            case Layer::I: nidx = 5; break;
            case Layer::Ip: nidx = 1; break;
        }
        for (int f = 0; f < nvec; ++f) out << ' ' << lab.vec[f] + 1;
        for (int f = 0; f < nidx; ++f) out << ' ' << static_cast<int>(lab.idx[f]);
        out << '\n';
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        const auto b = g.core.offsets[u], e = g.core.offsets[u + 1];
        for (auto i = b; i < e; ++i) {
            const int v = g.core.nbr[i];
            if (u < v) out << "e " << u << ' ' << v << ' ' << static_cast<int>(g.core.wgt[i]) << '\n';
        }
    }
}

GadgetGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

void write_graph_file(const std::string& path, const GadgetGraph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_graph(out, g);
}

}  // namespace ovd
