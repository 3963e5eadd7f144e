#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "strandhopf/graph.hpp"
#include "strandhopf/hopf.hpp"
#include "strandhopf/models.hpp"
#include "strandhopf/series.hpp"

namespace strandhopf {

using Json = nlohmann::json;  // std::map-backed objects: keys come out sorted

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// GraphDocument: {vertices, half_edges:[{id,vertex}], strands:[{id,half_edge[,tag]}],
// iota, sigma1, sigma2}; fixed points are omitted from the pair lists.
Json to_json(const TwoGraph& g);
TwoGraph two_graph_from_json(const Json& j);
std::string serialize_graph(const TwoGraph& g);  // pretty JSON, newline-terminated
TwoGraph parse_graph(const std::string& text);
TwoGraph load_graph(const std::string& path);

// 1-graph document: {vertices, half_edges:[{id,vertex[,tag]}], edges:[[h,h]...]}
Json to_json(const OneGraph& g);
OneGraph one_graph_from_json(const Json& j);

// Theory document: {name, dimension, zeta, rank, stranding, weight_rule,
// propagator:{graph,weight}, vertices:[{graph,weight}]}; weights as rationals "p/q".
Json to_json(const Theory& t);
Theory theory_from_json(const Json& j);
Theory load_theory(const std::string& preset_or_path);

Json to_json(const ValidationReport& r);
Json to_json(const DivergenceReport& r);
Json to_json(const CentralIdentityReport& r);
Json to_json(const AlgebraElement& x);  // [{monomial, coefficient}]
Json to_json(const TensorElement& x);   // [{left, right, coefficient}]
Json to_json(const Laurent& x);         // {"exponent": "coefficient"}

enum class DotMode { stranded, vertexgraph };
std::string to_dot(const TwoGraph& g, DotMode mode);

}  // namespace strandhopf
