#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "strandhopf/graph.hpp"
#include "strandhopf/iso.hpp"

namespace strandhopf {

// Edge subset of a parent graph; bit k refers to edges(parent)[k].
struct Subgraph {
    std::uint64_t mask = 0;
};

std::vector<Subgraph> subgraphs(const TwoGraph& g);
std::vector<bool> half_edge_flags(const TwoGraph& g, const Subgraph& h);
TwoGraph materialize(const TwoGraph& g, const Subgraph& h);
bool is_subgraph_of(const TwoGraph& g, const Subgraph& h);
TwoGraph contract(const TwoGraph& g, const Subgraph& h);

// Component-sensitive 1-graph isomorphism from the boundary of the inserted graph
// onto the vertex graphs of the host. Indices: inserted graph's external
// half-edges/strands -> host half-edges/strands.
struct InsertionMap {
    std::vector<int> half_edge_map;  // size = inserted.num_half_edges(); -1 on internal half-edges
    std::vector<int> strand_map;     // size = inserted.num_strands(); -1 on internal strands
    std::vector<int> component_to_vertex;
};

std::vector<InsertionMap> insertions(const TwoGraph& inserted, const TwoGraph& host);
std::uint64_t insertion_count(const TwoGraph& inserted, const TwoGraph& host);
TwoGraph insert(const TwoGraph& host, const InsertionMap& i, const TwoGraph& inserted);

struct ClosureResult {
    std::vector<OneGraph> vertex_types;  // one representative per iso class
    bool reached_fixpoint = false;       // false when the bounds truncated the closure
    int rounds = 0;
};

// Adds boundary components of connected graphs over the current vertex set
// until nothing new appears within the bounds.
ClosureResult contraction_closure_bounded(const std::vector<OneGraph>& vertex_types,
                                          int max_boundary_vertices, int max_edges,
                                          int max_rounds = 8);

}  // namespace strandhopf
