#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strandhopf/graph.hpp"
#include "strandhopf/iso.hpp"
#include "strandhopf/models.hpp"
#include "strandhopf/rational.hpp"

namespace strandhopf {

struct EnumeratedGraph {
    TwoGraph graph;
    CanonicalCode code;
    std::uint64_t aut = 1;
};

struct EnumerationOptions {
    int max_edges = 0;
    bool connected = true;
    std::optional<OneGraph> boundary;  // keep graphs whose boundary is isomorphic to this
    int max_components = 2;            // disconnected enumeration only
    bool bridgeless_only = false;
    bool colour_preserving = false;    // identify graphs only by tag-preserving isomorphisms
};

// Iso classes of graphs glued from the theory's vertex graphs, sorted by (edges, code).
std::vector<EnumeratedGraph> enumerate(const Theory& t, const EnumerationOptions& opt);
std::vector<EnumeratedGraph> enumerate(const Theory& t, int max_edges, bool connected,
                                       const std::optional<OneGraph>& boundary = std::nullopt);

// Worker count from STRANDHOPF_THREADS, else hardware concurrency.
unsigned worker_threads();

struct TruncatedSeries {
    std::optional<OneGraph> boundary;
    bool connected = true;
    int max_edges = 0;
    std::map<CanonicalCode, Rational> terms;
};

TruncatedSeries weighted_series(const Theory& t, const EnumerationOptions& opt);

// Adds boundary types of connected graphs over the current vertex set.
struct ClosureStep {
    Theory theory;            // input theory with the extra vertex types appended
    std::size_t added = 0;
};
ClosureStep extend_by_boundaries(const Theory& t, int max_edges);

struct IdentityPair {
    std::string left, right;  // left: monomial as '*'-joined codes
    Rational lhs, rhs;
    bool match() const { return lhs == rhs; }
};

struct CentralIdentityReport {
    bool pass = false;
    int max_edges = 0;
    int max_components = 0;
    std::size_t vertex_types = 0;
    std::size_t right_factors = 0;
    std::size_t pairs_compared = 0;
    std::size_t multi_trace_right_factors = 0;  // right factors with a disconnected vertex graph
    std::size_t dropped_lhs_pairs = 0;          // right factor outside the truncation class
    std::vector<IdentityPair> pairs;            // sorted; mismatches first when failing
    std::optional<IdentityPair> first_mismatch;
};

// `generic` drops the theory's stranding rule before extending by boundary types.
CentralIdentityReport check_central_identity(const Theory& t, int max_edges, int max_components = 2,
                                             bool generic = false);

}  // namespace strandhopf
