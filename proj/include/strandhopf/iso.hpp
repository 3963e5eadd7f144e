#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strandhopf/graph.hpp"

namespace strandhopf {

// Total-ordered structural encoding; equal iff the graphs are isomorphic.
using CanonicalCode = std::string;

// A labelling maps each element to its position in the canonical order.
struct OneGraphCanon {
    CanonicalCode code;
    std::vector<std::vector<int>> vertex_pos;     // one entry per automorphism
    std::vector<std::vector<int>> half_edge_pos;  // aligned with vertex_pos
    std::uint64_t aut = 1;
};

struct TwoGraphCanon {
    CanonicalCode code;
    std::uint64_t aut = 1;
};

// `use_tags` makes half-edge tags part of the structure (coloured vertex templates).
OneGraphCanon canonical_one(const OneGraph& g, bool use_tags = false, bool keep_labellings = false);
CanonicalCode canonical_form(const OneGraph& g, bool use_tags = false);
std::uint64_t one_graph_automorphism_count(const OneGraph& g);
bool are_isomorphic(const OneGraph& a, const OneGraph& b);

// Canonical form of a 2-graph as a whole. With `use_tags` strand tags are structure
// (colour-preserving isomorphism) and codes start with K instead of T.
TwoGraphCanon canonical_two(const TwoGraph& g, bool use_tags = false);
CanonicalCode canonical_form(const TwoGraph& g, bool use_tags = false);
std::uint64_t automorphism_count(const TwoGraph& g);
bool are_isomorphic(const TwoGraph& a, const TwoGraph& b);

// Rebuild a representative from a canonical code (labels v0.., h0.., s0..).
TwoGraph decode_two(const CanonicalCode& code);
OneGraph decode_one(const CanonicalCode& code);

// All isomorphisms a -> b as (vertex map, half-edge map) pairs.
struct OneGraphIso {
    std::vector<int> vertex_map;
    std::vector<int> half_edge_map;
};
std::vector<OneGraphIso> one_graph_isomorphisms(const OneGraph& a, const OneGraph& b);

// Product over iso classes of multiplicity! times product of member automorphism orders.
std::uint64_t boundary_multiset_aut_count(const std::vector<OneGraph>& multiset);

// Sorted member codes; the canonical form of a multiset of 1-graphs.
std::vector<CanonicalCode> multiset_code(const std::vector<OneGraph>& multiset);

}  // namespace strandhopf
