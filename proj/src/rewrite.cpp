#include "strandhopf/rewrite.hpp"

#include <functional>
#include <stdexcept>

namespace strandhopf {

std::vector<Subgraph> subgraphs(const TwoGraph& g) {
    const auto E = num_edges(g);
    if (E >= 63) throw std::length_error("too many edges for subgraph enumeration");
    std::vector<Subgraph> out;
    out.reserve(std::size_t{1} << E);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << E); ++m) out.push_back({m});
    return out;
}

std::vector<bool> half_edge_flags(const TwoGraph& g, const Subgraph& h) {
    const auto es = edges(g);
    std::vector<bool> flags(g.num_half_edges(), false);
    for (std::size_t k = 0; k < es.size(); ++k)
        if (h.mask >> k & 1u) flags[es[k].first] = flags[es[k].second] = true;
    return flags;
}

bool is_subgraph_of(const TwoGraph& g, const Subgraph& h) {
    const auto E = num_edges(g);
    return E >= 64 || (h.mask >> E) == 0;
}

TwoGraph materialize(const TwoGraph& g, const Subgraph& h) {
    if (!is_subgraph_of(g, h)) throw std::invalid_argument("not a subgraph of the parent");
    return restrict_edges(g, half_edge_flags(g, h));
}

TwoGraph contract(const TwoGraph& g, const Subgraph& h) {
    if (!is_subgraph_of(g, h)) throw std::invalid_argument("not a subgraph of the parent");
    return contract_edges(g, half_edge_flags(g, h));
}

namespace {

struct BoundaryPiece {
    OneGraph graph;
    std::vector<int> vertex_global;     // boundary vertex -> external half-edge of inserted graph
    std::vector<int> half_edge_global;  // boundary half-edge -> external strand
};

std::vector<BoundaryPiece> boundary_pieces(const TwoGraph& g) {
    const TwoGraph res = residue(g);
    std::vector<int> ext_h, ext_s;  // residue index -> original index
    for (std::size_t h = 0; h < g.num_half_edges(); ++h)
        if (g.iota[h] == static_cast<int>(h)) ext_h.push_back(static_cast<int>(h));
    for (std::size_t s = 0; s < g.num_strands(); ++s)
        if (g.iota[g.mu[s]] == g.mu[s]) ext_s.push_back(static_cast<int>(s));
    std::vector<BoundaryPiece> out;
    for (std::size_t v = 0; v < res.num_vertices(); ++v) {
        BoundaryPiece p;
        p.graph = vertex_graph(res, static_cast<int>(v));
        for (std::size_t h = 0; h < res.num_half_edges(); ++h)
            if (res.nu[h] == static_cast<int>(v)) p.vertex_global.push_back(ext_h[h]);
        for (std::size_t s = 0; s < res.num_strands(); ++s)
            if (res.nu[res.mu[s]] == static_cast<int>(v)) p.half_edge_global.push_back(ext_s[s]);
        out.push_back(std::move(p));
    }
    return out;
}

struct HostVertex {
    OneGraph graph;
    std::vector<int> vertex_global;     // vertex-graph vertex -> host half-edge
    std::vector<int> half_edge_global;  // vertex-graph half-edge -> host strand
    CanonicalCode code;
};

}  // namespace

std::vector<InsertionMap> insertions(const TwoGraph& inserted, const TwoGraph& host) {
    std::vector<InsertionMap> out;
    auto pieces = boundary_pieces(inserted);
    if (pieces.size() != host.num_vertices()) return out;
    std::vector<HostVertex> hv(host.num_vertices());
    for (std::size_t v = 0; v < host.num_vertices(); ++v) {
        hv[v].graph = vertex_graph(host, static_cast<int>(v));
        for (std::size_t h = 0; h < host.num_half_edges(); ++h)
            if (host.nu[h] == static_cast<int>(v)) hv[v].vertex_global.push_back(static_cast<int>(h));
        for (std::size_t s = 0; s < host.num_strands(); ++s)
            if (host.nu[host.mu[s]] == static_cast<int>(v)) hv[v].half_edge_global.push_back(static_cast<int>(s));
        hv[v].code = canonical_form(hv[v].graph);
    }
    std::vector<CanonicalCode> piece_code;
    for (auto& p : pieces) piece_code.push_back(canonical_form(p.graph));

    // isomorphisms piece -> host vertex, computed lazily per compatible pair
    std::vector<std::vector<std::vector<OneGraphIso>>> isos(
        pieces.size(), std::vector<std::vector<OneGraphIso>>(hv.size()));
    std::vector<std::vector<char>> computed(pieces.size(), std::vector<char>(hv.size(), 0));

    std::vector<int> assign(pieces.size(), -1);
    std::vector<char> used(hv.size(), 0);
    std::vector<const OneGraphIso*> chosen(pieces.size(), nullptr);

    std::function<void(std::size_t)> emit = [&](std::size_t c) {
        if (c == pieces.size()) {
            InsertionMap m;
            m.half_edge_map.assign(inserted.num_half_edges(), -1);
            m.strand_map.assign(inserted.num_strands(), -1);
            m.component_to_vertex = assign;
            for (std::size_t k = 0; k < pieces.size(); ++k) {
                const auto& p = pieces[k];
                const auto& h = hv[assign[k]];
                const auto& iso = *chosen[k];
                for (std::size_t x = 0; x < p.vertex_global.size(); ++x)
                    m.half_edge_map[p.vertex_global[x]] = h.vertex_global[iso.vertex_map[x]];
                for (std::size_t x = 0; x < p.half_edge_global.size(); ++x)
                    m.strand_map[p.half_edge_global[x]] = h.half_edge_global[iso.half_edge_map[x]];
            }
            out.push_back(std::move(m));
            return;
        }
        for (std::size_t v = 0; v < hv.size(); ++v) {
            if (used[v] || hv[v].code != piece_code[c]) continue;
            if (!computed[c][v]) {
                isos[c][v] = one_graph_isomorphisms(pieces[c].graph, hv[v].graph);
                computed[c][v] = 1;
            }
            used[v] = 1;
            assign[c] = static_cast<int>(v);
            for (const auto& iso : isos[c][v]) {
                chosen[c] = &iso;
                emit(c + 1);
            }
            used[v] = 0;
            assign[c] = -1;
        }
    };
    emit(0);
    return out;
}

std::uint64_t insertion_count(const TwoGraph& inserted, const TwoGraph& host) {
    auto ms = boundary_components(inserted);
    auto vg = vertex_graphs_multiset(host);
    if (multiset_code(ms) != multiset_code(vg)) return 0;
    return boundary_multiset_aut_count(ms);
}

TwoGraph insert(const TwoGraph& host, const InsertionMap& i, const TwoGraph& inserted) {
    if (i.half_edge_map.size() != inserted.num_half_edges() || i.strand_map.size() != inserted.num_strands())
        throw std::invalid_argument("insertion map does not fit the inserted graph");
    std::vector<int> back_h(host.num_half_edges(), -1), back_s(host.num_strands(), -1);
    for (std::size_t h = 0; h < inserted.num_half_edges(); ++h) {
        const int t = i.half_edge_map[h];
        if (t < 0) continue;
        if (static_cast<std::size_t>(t) >= host.num_half_edges() || back_h[t] >= 0)
            throw std::invalid_argument("insertion map is not a bijection on half-edges");
        back_h[t] = static_cast<int>(h);
    }
    for (std::size_t s = 0; s < inserted.num_strands(); ++s) {
        const int t = i.strand_map[s];
        if (t < 0) continue;
        if (static_cast<std::size_t>(t) >= host.num_strands() || back_s[t] >= 0)
            throw std::invalid_argument("insertion map is not a bijection on strands");
        back_s[t] = static_cast<int>(s);
    }
    for (int b : back_h)
        if (b < 0) throw std::invalid_argument("insertion map misses a host half-edge");
    for (int b : back_s)
        if (b < 0) throw std::invalid_argument("insertion map misses a host strand");
    TwoGraph out = inserted;
    for (std::size_t h = 0; h < inserted.num_half_edges(); ++h) {
        const int t = i.half_edge_map[h];
        if (t >= 0) out.iota[h] = back_h[host.iota[t]];
    }
    for (std::size_t s = 0; s < inserted.num_strands(); ++s) {
        const int t = i.strand_map[s];
        if (t >= 0) out.sigma2[s] = back_s[host.sigma2[t]];
    }
    return out;
}

}  // namespace strandhopf
