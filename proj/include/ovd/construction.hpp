#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "ovd/graphcore.hpp"
#include "ovd/ovcore.hpp"

namespace ovd {

enum class Layer : std::uint8_t { T = 0, C, P, I, Tp, Tpp, Ip };
enum class Flavor { Weighted, Unweighted };

std::string_view layer_name(Layer layer);    // "T", "C", "P", "I", "T'", "T''", "I'"
std::string_view flavor_name(Flavor flavor);

/// Tagged gadget-vertex label. Field usage per layer:
///   T/T'/T''  3 vector fields            (ordered, pairwise distinct)
///   C         2 vector fields + 3 indices (ordered, a != b)
///   P         2 vector fields + 3 indices (multiset, canonicalized a <= b)
///   I         5 indices
///   I'        1 index
/// Vector fields are 0-based instance ids; index fields are 1-based.
struct VertexLabel {
    Layer layer = Layer::T;
    std::array<std::uint8_t, 3> vec{0, 0, 0};
    std::array<std::uint8_t, 5> idx{0, 0, 0, 0, 0};

    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;

    std::uint64_t encode() const;  // injective packing, used for id lookup
    std::string to_string() const;

    static VertexLabel triple(Layer layer, int a, int b, int c);
    static VertexLabel couple(int a, int b, int i, int j, int k);
    static VertexLabel pair(int a, int b, int i, int j, int k);  // canonicalizes a <= b
    static VertexLabel index5(int p1, int p2, int i, int j, int k);
    static VertexLabel index1(int i);
};

struct LayerRange {
    int begin = 0;
    int end = 0;
    int size() const { return end - begin; }
};

/// Immutable labeled gadget graph. Vertex ids follow layer order
/// T, C, P, I (then T', T'', I') with lexicographic order inside each layer.
struct GadgetGraph {
    Flavor flavor = Flavor::Weighted;
    int l = 0;
    int num_vectors = 0;
    std::vector<VertexLabel> labels;
    std::array<LayerRange, 7> layers;  // indexed by Layer
    WeightedGraph core;
    std::unordered_map<std::uint64_t, std::int32_t> index_of;

    int vertex_count() const { return core.vertex_count(); }
    std::int64_t edge_count() const { return core.edge_count(); }
    const LayerRange& range(Layer layer) const { return layers[static_cast<int>(layer)]; }
    Layer layer_of(int v) const { return labels[v].layer; }

    /// Vertex id of a label, or -1 when absent.
    int find(const VertexLabel& label) const;
};

struct BuildLimits {
    int max_l = 6;
    std::int64_t max_edges = -1;  // -1 = unlimited
};

/// Upper bounds on |V| and |E| from the closed-form layer counts; used by
/// the size guard before any allocation.
struct SizePrediction {
    std::int64_t vertices = 0;
    std::int64_t edges = 0;
};
SizePrediction predict_size(int n, int l, Flavor flavor);

// Vertex- and edge-existence predicates, exposed individually.
bool exists_C(const OvInstance& inst, int a, int b, int i, int j, int k);
bool exists_P(const OvInstance& inst, int a, int b, int i, int j, int k);
bool edge_TC(const OvInstance& inst, const VertexLabel& t, const VertexLabel& cvert);
bool edge_CP(const OvInstance& inst, const VertexLabel& cvert, const VertexLabel& pvert);
bool edge_TI(const OvInstance& inst, const VertexLabel& t, const VertexLabel& ivert);
bool edge_IP(const OvInstance& inst, const VertexLabel& ivert, const VertexLabel& pvert);
bool edge_IpTpp(const OvInstance& inst, const VertexLabel& ip, const VertexLabel& t);

GadgetGraph build_weighted(const OvInstance& inst, const BuildLimits& limits = {});
GadgetGraph build_unweighted(const OvInstance& inst, const BuildLimits& limits = {});
GadgetGraph build_gadget(const OvInstance& inst, Flavor flavor, const BuildLimits& limits = {});

struct CountSummary {
    Flavor flavor = Flavor::Weighted;
    int num_vectors = 0;
    int l = 0;
    std::map<std::string, std::int64_t> layer_counts;  // by layer name
    std::map<std::string, std::int64_t> edge_counts;   // by "X-Y" layer-pair key
    bool identities_ok = true;                         // |T| = n(n-1)(n-2), |I| = l^5, |I'| = l
    std::vector<std::string> identity_failures;
};

CountSummary count_summary(const GadgetGraph& g);

std::string edge_class_key(Layer a, Layer b);

// Text format: "p gadget <flavor> <n_vertices> <n_edges>", then
// "v <id> <layer> <fields...>" (1-based fields) and "e <u> <v> <w>" with u < v.
GadgetGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const GadgetGraph& g);
GadgetGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const GadgetGraph& g);

}  // namespace ovd
