#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace strandhopf {

// Natural ordering of labels: digit runs compare numerically ("h2" < "h10").
bool label_less(const std::string& a, const std::string& b);

// Ordinary graph with external legs. Fixed points of `pairing` are legs.
struct OneGraph {
    std::vector<std::string> vertex_labels;
    std::vector<std::string> half_edge_labels;
    std::vector<int> attach;   // half-edge -> vertex
    std::vector<int> pairing;  // involution on half-edges
    std::vector<int> tags;     // optional per half-edge decoration; empty when unused

    std::size_t num_vertices() const { return vertex_labels.size(); }
    std::size_t num_half_edges() const { return half_edge_labels.size(); }
    std::size_t num_edges() const;
    bool has_tags() const { return !tags.empty(); }
};

// Stranded graph. Indices are positions in the label vectors.
struct TwoGraph {
    std::vector<std::string> vertex_labels;
    std::vector<std::string> half_edge_labels;
    std::vector<std::string> strand_labels;
    std::vector<int> nu;      // half-edge -> vertex
    std::vector<int> mu;      // strand -> half-edge
    std::vector<int> iota;    // involution on half-edges
    std::vector<int> sigma1;  // fixed-point-free involution on strands, vertex-local
    std::vector<int> sigma2;  // involution on strands along edges
    std::vector<int> tags;    // optional per-strand colour/orientation; ignored by isomorphism

    std::size_t num_vertices() const { return vertex_labels.size(); }
    std::size_t num_half_edges() const { return half_edge_labels.size(); }
    std::size_t num_strands() const { return strand_labels.size(); }
    bool has_tags() const { return !tags.empty(); }
};

struct ValidationReport {
    bool valid = true;
    bool presentations_agree = false;  // involution form and edge-set form give the same data
    std::vector<std::string> violations;
};

struct Face {
    bool internal = false;
    std::vector<int> sections;  // strand indices, alternating sigma1 / sigma2 steps
};

struct FaceSet {
    std::vector<Face> internal;
    std::vector<Face> external;
};

struct CellComplex {
    enum class Kind { vertex, edge, external_edge, face };
    struct Cell {
        Kind kind;
        int dim;
        std::vector<int> members;  // vertex index, half-edge indices, or strand indices
    };
    std::vector<Cell> cells;
    std::vector<std::pair<int, int>> covers;  // (higher, lower) with dim gap one
    bool pure = true;
    bool two_dimensional = true;
    bool chain_property = true;

    bool less(int lower, int higher) const;
};

// ---- validation -------------------------------------------------------

ValidationReport validate(const OneGraph& g);
ValidationReport validate(const TwoGraph& g);

// ---- derived views ----------------------------------------------------

// Internal edges as (h, iota(h)) with h the smaller label, sorted by label.
std::vector<std::pair<int, int>> edges(const TwoGraph& g);
std::vector<std::pair<int, int>> edge_strands(const TwoGraph& g);
std::vector<std::pair<int, int>> vertex_strands(const TwoGraph& g);
std::vector<int> external_half_edges(const TwoGraph& g);
std::vector<int> external_strands(const TwoGraph& g);
std::vector<int> half_edges_at(const TwoGraph& g, int v);
std::vector<int> strands_at(const TwoGraph& g, int h);
std::size_t num_edges(const TwoGraph& g);
int find_vertex(const TwoGraph& g, const std::string& label);
int find_half_edge(const TwoGraph& g, const std::string& label);

// ---- vertex graphs ----------------------------------------------------

OneGraph vertex_graph(const TwoGraph& g, int v);
OneGraph vertex_graph(const TwoGraph& g, const std::string& v);
std::vector<OneGraph> vertex_graphs_multiset(const TwoGraph& g);
OneGraph vertex_graphs_union(const TwoGraph& g);
OneGraph disjoint_union(const std::vector<OneGraph>& parts);

// ---- faces ------------------------------------------------------------

FaceSet faces(const TwoGraph& g);
std::size_t internal_face_count(const TwoGraph& g);

// ---- structure --------------------------------------------------------

// Component index per vertex (connectivity through internal edges), and count.
std::pair<std::vector<int>, int> vertex_components(const TwoGraph& g);
std::vector<TwoGraph> connected_components(const TwoGraph& g);
bool is_connected(const TwoGraph& g);
bool is_bridgeless(const TwoGraph& g);
long euler_characteristic(const TwoGraph& g);

std::pair<std::vector<int>, int> components(const OneGraph& g);
std::vector<OneGraph> connected_components(const OneGraph& g);

// Keep the listed internal edges (by one of their half-edges), drop all others.
TwoGraph restrict_edges(const TwoGraph& g, const std::vector<bool>& keep_edge_of_half_edge);
TwoGraph skeleton(const TwoGraph& g);
// Contract the internal edges whose half-edges are flagged; one new vertex per
// connected piece, external faces of the piece become the new vertex pairs.
TwoGraph contract_edges(const TwoGraph& g, const std::vector<bool>& in_subgraph);
TwoGraph residue(const TwoGraph& g);
TwoGraph disjoint_union(const std::vector<TwoGraph>& parts);
TwoGraph relabel_with_prefix(const TwoGraph& g, const std::string& prefix);

OneGraph boundary(const TwoGraph& g);
std::vector<OneGraph> boundary_components(const TwoGraph& g);

CellComplex to_complex(const TwoGraph& g);

// ---- constructions ----------------------------------------------------

// Combinatorial map on labels 0..n-1; sigma a permutation, iota an involution.
TwoGraph from_combinatorial_map(const std::vector<int>& sigma, const std::vector<int>& iota,
                                const std::vector<std::string>& half_edge_labels = {});

struct ColouredEdge {
    int a = 0;
    int b = -1;  // -1 marks an external colour-0 leg at node a
    int colour = 0;
};

// (r+1)-coloured graph on nodes 0..n-1; colour 0 edges become stranded edges.
TwoGraph from_coloured_graph(int num_nodes, int rank, const std::vector<ColouredEdge>& edges,
                             const std::vector<std::string>& node_labels = {});

// Single vertex whose vertex graph is `vg` (half-edges become strands, tags carried over).
TwoGraph single_vertex(const OneGraph& vg, const std::string& label = "v1");

// Recover a colouring of the strands (colours 1..r) when g is in the coloured class.
std::optional<std::vector<int>> find_colouring(const TwoGraph& g, int rank);

}  // namespace strandhopf
