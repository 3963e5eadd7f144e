#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strandhopf/graph.hpp"
#include "strandhopf/iso.hpp"
#include "strandhopf/rational.hpp"

namespace strandhopf {

// How strands may be paired along a new edge during enumeration.
enum class Stranding {
    generic,   // any bijection between the two strand sets
    oriented,  // tag 0 pairs with tag 1 (orientable maps)
    coloured,  // equal tags pair (coloured graphs)
};

// Fallback for vertex graphs not listed explicitly (contracted vertices).
enum class WeightRule { explicit_only, zero_default, tensorial };

struct WeightedGraph {
    OneGraph graph;  // tags describe the stranding of enumeration templates
    Rational weight;
};

struct Theory {
    std::string name;
    int dimension = 1;
    Rational zeta = 1;
    int rank = 0;  // 0 when not a coloured theory
    WeightedGraph propagator;
    std::vector<WeightedGraph> vertices;  // interactions; the propagator graph is added implicitly
    Stranding stranding = Stranding::generic;
    WeightRule rule = WeightRule::explicit_only;

    std::vector<WeightedGraph> vertex_set() const;  // interactions plus propagator, deduplicated
    Rational vertex_weight(const OneGraph& g) const;
    Rational edge_weight(const OneGraph& gamma_e) const;
    Rational d_r() const;
    std::optional<Rational> max_renormalizable_order() const;
    int spacetime_dimension() const { return 2 * dimension; }
};

// ---- standard vertex graphs ----

OneGraph cycle_vertex_graph(int n);                 // n-gon with orientation tags 0/1
OneGraph melon_vertex_graph(int rank);              // two nodes, `rank` parallel coloured edges
OneGraph quartic_melonic_vertex_graph(int rank, int colour);  // pillow with distinguished colour

// Presets: "gw4" (quartic matrix, d=2, oriented), "phi4-matrix" (same, generic stranding),
// "bgr" (rank 4, d=1, zeta=2, coloured), "tensor-r3-quartic" (rank 3 quartic, coloured).
Theory preset_theory(const std::string& name);
std::vector<std::string> preset_names();

// ---- degrees and invariants ----

OneGraph edge_graph(const TwoGraph& g, int h);  // two vertices, one edge per strand pair
Rational superficial_degree(const Theory& t, const TwoGraph& g);

std::size_t boundary_vertex_count(const TwoGraph& g);  // external half-edges
std::size_t boundary_edge_count(const TwoGraph& g);    // external faces
std::size_t boundary_component_count(const TwoGraph& g);
bool is_map_class(const TwoGraph& g);  // every half-edge carries two strands

// Throws std::invalid_argument when g is not a connected map or the value is not integral.
long genus(const TwoGraph& g);

// Strand colours: tags when present, otherwise a recovered colouring.
std::optional<std::vector<int>> strand_colours(const TwoGraph& g, int rank);
bool is_single_trace(const TwoGraph& g);  // every vertex graph connected
Rational gurau_degree_closed(const TwoGraph& g, int rank);
Rational gurau_degree_open(const TwoGraph& g, int rank);      // sum of pinched-jacket genera
Rational gurau_degree_capped(const TwoGraph& g, int rank);    // closed degree of the capped closure
Rational gurau_degree_boundary(const TwoGraph& g, int rank);  // of the rank-1 boundary graph
TwoGraph cap_boundary(const TwoGraph& g);

Rational matrix_degree_closed_form(const Theory& t, const TwoGraph& g);
Rational tensorial_degree_closed_form(const Theory& t, const TwoGraph& g);
Rational tensorial_degree_reduced(const Theory& t, const TwoGraph& g);  // vertex-count-free form
Rational bgr_degree_display(const TwoGraph& g);
Rational vertex_weight_tensorial(const Theory& t, const OneGraph& gamma_v);

struct ComponentReport {
    Rational omega_sd;
    long V = 0, E = 0, F = 0, V_boundary = 0, E_boundary = 0, K_boundary = 0;
    std::optional<long> genus;
    std::optional<Rational> gurau, gurau_boundary, gurau_capped;
    bool bridgeless = true;
    bool divergent = false;
    CanonicalCode code, boundary_code;
};

struct DivergenceReport {
    std::vector<ComponentReport> components;
    bool divergent = false;  // member of the superficially divergent set
};

DivergenceReport classify(const Theory& t, const TwoGraph& g);
bool is_superficially_divergent(const Theory& t, const TwoGraph& g);

struct RenormalizabilityReport {
    std::size_t graphs_checked = 0;
    std::size_t formula_mismatches = 0;
    std::size_t invariant_conflicts = 0;  // same closed-form invariants, different degree
    std::vector<std::string> counterexamples;
    bool ok() const { return formula_mismatches == 0 && invariant_conflicts == 0; }
};

std::vector<TwoGraph> divergent_set(const Theory& t, int max_edges);
RenormalizabilityReport renormalizability_check(const Theory& t, int max_edges);

}  // namespace strandhopf
