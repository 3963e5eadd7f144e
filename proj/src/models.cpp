#include "strandhopf/models.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "strandhopf/rewrite.hpp"
#include "strandhopf/series.hpp"

namespace strandhopf {

Rational parse_rational(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational number: " + s);
    }
}

// ------------------------------------------------------------ vertex graphs

OneGraph cycle_vertex_graph(int n) {
    if (n < 1) throw std::invalid_argument("cycle needs at least one corner");
    OneGraph g;
    for (int i = 0; i < n; ++i) g.vertex_labels.push_back("u" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i) {
        g.half_edge_labels.push_back("u" + std::to_string(i + 1) + ":0");
        g.half_edge_labels.push_back("u" + std::to_string(i + 1) + ":1");
        g.attach.push_back(i);
        g.attach.push_back(i);
        g.tags.push_back(0);
        g.tags.push_back(1);
    }
    g.pairing.assign(2 * n, -1);
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        g.pairing[2 * i + 1] = 2 * j;
        g.pairing[2 * j] = 2 * i + 1;
    }
    return g;
}

namespace {

// Bipartite coloured graph from a list of (white, black, colour) edges.
OneGraph coloured_vertex_graph(int nodes, const std::vector<std::array<int, 3>>& es) {
    OneGraph g;
    for (int i = 0; i < nodes; ++i) g.vertex_labels.push_back("u" + std::to_string(i + 1));
    for (auto [a, b, c] : es) {
        const int x = static_cast<int>(g.half_edge_labels.size());
        g.half_edge_labels.push_back(g.vertex_labels[a] + ":" + std::to_string(c));
        g.half_edge_labels.push_back(g.vertex_labels[b] + ":" + std::to_string(c));
        g.attach.push_back(a);
        g.attach.push_back(b);
        g.tags.push_back(c);
        g.tags.push_back(c);
        g.pairing.push_back(x + 1);
        g.pairing.push_back(x);
    }
    return g;
}

}  // namespace

OneGraph melon_vertex_graph(int rank) {
    std::vector<std::array<int, 3>> es;
    for (int c = 1; c <= rank; ++c) es.push_back({0, 1, c});
    return coloured_vertex_graph(2, es);
}

OneGraph quartic_melonic_vertex_graph(int rank, int colour) {
    // nodes u1,u2 (white) u3,u4 (black): u1-u3 and u2-u4 carry all colours but one
    std::vector<std::array<int, 3>> es;
    for (int c = 1; c <= rank; ++c) {
        if (c == colour) {
            es.push_back({0, 3, c});
            es.push_back({1, 2, c});
        } else {
            es.push_back({0, 2, c});
            es.push_back({1, 3, c});
        }
    }
    return coloured_vertex_graph(4, es);
}

// ------------------------------------------------------------------- theory

std::vector<WeightedGraph> Theory::vertex_set() const {
    std::vector<WeightedGraph> out;
    std::set<CanonicalCode> seen;
    auto add = [&](const WeightedGraph& w) {
        if (seen.insert(canonical_form(w.graph, w.graph.has_tags())).second) out.push_back(w);
    };
    for (const auto& w : vertices) add(w);
    add(propagator);
    return out;
}

Rational Theory::d_r() const { return Rational(dimension) * Rational(rank > 0 ? rank - 1 : 1); }

Rational vertex_weight_tensorial(const Theory& t, const OneGraph& gamma_v) {
    const Rational dr = t.d_r();
    return dr - Rational(static_cast<long>(gamma_v.num_vertices()), 2) * (dr - t.zeta);
}

Rational Theory::vertex_weight(const OneGraph& g) const {
    const auto code = canonical_form(g);
    for (const auto& w : vertices)
        if (canonical_form(w.graph) == code) return w.weight;
    if (canonical_form(propagator.graph) == code) return propagator.weight;
    switch (rule) {
        case WeightRule::zero_default: return 0;
        case WeightRule::tensorial: return vertex_weight_tensorial(*this, g);
        case WeightRule::explicit_only: break;
    }
    throw std::invalid_argument("no weight for vertex graph " + code);
}

Rational Theory::edge_weight(const OneGraph& gamma_e) const {
    if (canonical_form(gamma_e) == canonical_form(propagator.graph)) return propagator.weight;
    throw std::invalid_argument("edge graph is not a propagator of the theory: " + canonical_form(gamma_e));
}

std::optional<Rational> Theory::max_renormalizable_order() const {
    const Rational dr = d_r();
    if (dr == zeta) return std::nullopt;  // super-renormalizable at every order
    return floor_to_rational(Rational(2) * dr / (dr - zeta));
}

namespace {

Theory matrix_quartic(Stranding st) {
    Theory t;
    t.name = st == Stranding::oriented ? "gw4" : "phi4-matrix";
    t.dimension = 2;
    t.zeta = 1;
    t.rank = 2;
    t.propagator = {cycle_vertex_graph(2), 1};
    t.vertices = {{cycle_vertex_graph(4), 0}};
    t.stranding = st;
    t.rule = WeightRule::tensorial;
    return t;
}

}  // namespace

Theory preset_theory(const std::string& name) {
    if (name == "gw4") return matrix_quartic(Stranding::oriented);
    if (name == "phi4-matrix") return matrix_quartic(Stranding::generic);
    if (name == "bgr") {
        Theory t;
        t.name = "bgr";
        t.dimension = 1;
        t.zeta = 2;  // Laplacian-type propagator; makes sextic the maximal renormalizable order
        t.rank = 4;
        t.propagator = {melon_vertex_graph(4), 2};
        for (int c = 1; c <= 4; ++c) {
            auto q = quartic_melonic_vertex_graph(4, c);
            t.vertices.push_back({q, 0});
        }
        t.vertices.push_back({disjoint_union({melon_vertex_graph(4), melon_vertex_graph(4)}), 0});
        t.stranding = Stranding::coloured;
        t.rule = WeightRule::tensorial;
        for (auto& v : t.vertices) v.weight = vertex_weight_tensorial(t, v.graph);
        return t;
    }
    if (name == "tensor-r3-quartic") {
        Theory t;
        t.name = name;
        t.dimension = 1;
        t.zeta = 1;
        t.rank = 3;
        t.propagator = {melon_vertex_graph(3), 1};
        t.vertices.push_back({quartic_melonic_vertex_graph(3, 1), 0});
        t.stranding = Stranding::coloured;
        t.rule = WeightRule::tensorial;
        for (auto& v : t.vertices) v.weight = vertex_weight_tensorial(t, v.graph);
        return t;
    }
    throw std::invalid_argument("unknown theory preset: " + name);
}

std::vector<std::string> preset_names() { return {"gw4", "phi4-matrix", "bgr", "tensor-r3-quartic"}; }

// ------------------------------------------------------------------ degrees

OneGraph edge_graph(const TwoGraph& g, int h) {
    const int k = g.iota[h];
    if (k == h) throw std::invalid_argument("half-edge is external");
    OneGraph e;
    e.vertex_labels = {g.half_edge_labels[h], g.half_edge_labels[k]};
    for (int s : strands_at(g, h)) {
        const int t = g.sigma2[s];
        const int x = static_cast<int>(e.half_edge_labels.size());
        e.half_edge_labels.push_back(g.strand_labels[s]);
        e.half_edge_labels.push_back(g.strand_labels[t]);
        e.attach.push_back(0);
        e.attach.push_back(1);
        e.pairing.push_back(x + 1);
        e.pairing.push_back(x);
    }
    return e;
}

Rational superficial_degree(const Theory& t, const TwoGraph& g) {
    Rational w = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) w += t.vertex_weight(vertex_graph(g, static_cast<int>(v)));
    for (auto [h, k] : edges(g)) w -= t.edge_weight(edge_graph(g, h));
    w += Rational(t.dimension) * Rational(static_cast<long>(internal_face_count(g)));
    return w;
}

std::size_t boundary_vertex_count(const TwoGraph& g) { return external_half_edges(g).size(); }
std::size_t boundary_edge_count(const TwoGraph& g) { return faces(g).external.size(); }
std::size_t boundary_component_count(const TwoGraph& g) {
    const auto b = boundary(g);
    return static_cast<std::size_t>(components(b).second);
}

bool is_map_class(const TwoGraph& g) {
    std::vector<int> cnt(g.num_half_edges(), 0);
    for (int h : g.mu) ++cnt[h];
    return std::all_of(cnt.begin(), cnt.end(), [](int c) { return c == 2; });
}

long genus(const TwoGraph& g) {
    if (!is_map_class(g)) throw std::invalid_argument("genus needs a combinatorial map (two strands per half-edge)");
    if (!is_connected(g)) throw std::invalid_argument("genus needs a connected graph");
    const long K = static_cast<long>(boundary_component_count(g));
    const long V = static_cast<long>(g.num_vertices()), E = static_cast<long>(num_edges(g));
    const long F = static_cast<long>(internal_face_count(g));
    const long twice = 2 - K - V + E - F;
    if (twice < 0 || twice % 2 != 0) throw std::invalid_argument("non-integer genus: malformed map");
    return twice / 2;
}

// ---------------------------------------------------------------- coloured

namespace {

// adj[node][c] = partner along colour c, -1 when absent (colour 0 legs only)
struct ColouredView {
    int colours = 0;  // colour ids 0..colours-1 (or 1..colours-1 for boundary graphs)
    std::vector<std::vector<int>> adj;
};

bool tags_are_colouring(const TwoGraph& g, int rank) {
    if (!g.has_tags()) return false;
    std::vector<std::vector<int>> seen(g.num_half_edges());
    for (std::size_t s = 0; s < g.num_strands(); ++s) {
        const int c = g.tags[s];
        if (c < 1 || c > rank) return false;
        if (g.tags[g.sigma1[s]] != c || g.tags[g.sigma2[s]] != c) return false;
        seen[g.mu[s]].push_back(c);
    }
    for (auto& v : seen) {
        std::sort(v.begin(), v.end());
        if (static_cast<int>(v.size()) != rank) return false;
        for (int i = 0; i < rank; ++i)
            if (v[i] != i + 1) return false;
    }
    return true;
}

ColouredView coloured_view(const TwoGraph& g, int rank) {
    auto col = strand_colours(g, rank);
    if (!col) throw std::invalid_argument("not a coloured 2-graph of rank " + std::to_string(rank));
    ColouredView cv;
    cv.colours = rank + 1;
    cv.adj.assign(g.num_half_edges(), std::vector<int>(rank + 1, -1));
    for (std::size_t h = 0; h < g.num_half_edges(); ++h)
        if (g.iota[h] != static_cast<int>(h)) cv.adj[h][0] = g.iota[h];
    for (std::size_t s = 0; s < g.num_strands(); ++s) cv.adj[g.mu[s]][(*col)[s]] = g.mu[g.sigma1[s]];
    return cv;
}

long bicoloured_cycles(const ColouredView& cv, int a, int b) {
    const int n = static_cast<int>(cv.adj.size());
    std::vector<char> seen(n, 0);
    long cycles = 0;
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        int cur = x, c = a;
        bool closed = true;
        do {
            seen[cur] = 1;
            const int nxt = cv.adj[cur][c];
            if (nxt < 0) {
                closed = false;
                break;
            }
            cur = nxt;
            c = c == a ? b : a;
        } while (!(cur == x && c == a));
        if (closed) ++cycles;
    }
    return cycles;
}

long graph_components(const ColouredView& cv, const std::vector<int>& colours) {
    const int n = static_cast<int>(cv.adj.size());
    std::vector<int> comp(n, -1);
    long k = 0;
    for (int x = 0; x < n; ++x) {
        if (comp[x] >= 0) continue;
        std::vector<int> st{x};
        comp[x] = static_cast<int>(k);
        while (!st.empty()) {
            const int y = st.back();
            st.pop_back();
            for (int c : colours) {
                const int z = cv.adj[y][c];
                if (z >= 0 && comp[z] < 0) {
                    comp[z] = static_cast<int>(k);
                    st.push_back(z);
                }
            }
        }
        ++k;
    }
    return k;
}

// Sum of jacket genera over cyclic orders of `colours` up to reversal; graph must be closed.
Rational jacket_degree(const ColouredView& cv, std::vector<int> colours) {
    const long m = static_cast<long>(colours.size());
    const long n = static_cast<long>(cv.adj.size());
    if (m < 3 || n == 0) return 0;
    const long C = graph_components(cv, colours);
    std::map<std::pair<int, int>, long> cyc;
    auto cycles = [&](int a, int b) {
        auto key = std::minmax(a, b);
        auto it = cyc.find(key);
        if (it != cyc.end()) return it->second;
        return cyc[key] = bicoloured_cycles(cv, a, b);
    };
    std::sort(colours.begin() + 1, colours.end());
    Rational total = 0;
    do {
        if (colours[1] > colours.back()) continue;  // reversal representative
        long F = 0;
        for (long i = 0; i < m; ++i) F += cycles(colours[i], colours[(i + 1) % m]);
        const long E = m * n / 2;
        total += Rational(2 * C - n + E - F, 2);
    } while (std::next_permutation(colours.begin() + 1, colours.end()));
    return total;
}

}  // namespace

std::optional<std::vector<int>> strand_colours(const TwoGraph& g, int rank) {
    if (tags_are_colouring(g, rank)) return g.tags;
    return find_colouring(g, rank);
}

bool is_single_trace(const TwoGraph& g) {
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (components(vertex_graph(g, static_cast<int>(v))).second > 1) return false;
    return true;
}

namespace {

// Rank 2 has a single jacket, the map itself; maps without a 3-colouring fall back to it.
bool uncoloured_map(const TwoGraph& g, int rank) {
    return rank == 2 && is_map_class(g) && !strand_colours(g, 2);
}

}  // namespace

Rational gurau_degree_closed(const TwoGraph& g, int rank) {
    if (!external_half_edges(g).empty()) throw std::invalid_argument("closed Gurau degree needs a closed graph");
    if (uncoloured_map(g, rank)) return genus(g);
    const auto cv = coloured_view(g, rank);
    std::vector<int> cs(rank + 1);
    std::iota(cs.begin(), cs.end(), 0);
    return jacket_degree(cv, cs);
}

namespace {

// Capped closure as a coloured view: every external node a gets a copy a' joined
// by colour 0; copies are joined by colour c along external faces of colour c.
ColouredView capped_view(const ColouredView& cv) {
    const int n = static_cast<int>(cv.adj.size());
    const int rank = cv.colours - 1;
    std::vector<int> copy(n, -1);
    ColouredView out = cv;
    for (int a = 0; a < n; ++a)
        if (cv.adj[a][0] < 0) {
            copy[a] = static_cast<int>(out.adj.size());
            out.adj.push_back(std::vector<int>(rank + 1, -1));
            out.adj[a][0] = copy[a];
            out.adj[copy[a]][0] = a;
        }
    for (int a = 0; a < n; ++a) {
        if (copy[a] < 0) continue;
        for (int c = 1; c <= rank; ++c) {
            int cur = cv.adj[a][c];
            while (cv.adj[cur][0] >= 0) cur = cv.adj[cv.adj[cur][0]][c];
            out.adj[copy[a]][c] = copy[cur];
        }
    }
    return out;
}

ColouredView boundary_view(const ColouredView& cv) {
    const int n = static_cast<int>(cv.adj.size());
    const int rank = cv.colours - 1;
    std::vector<int> idx(n, -1);
    int m = 0;
    for (int a = 0; a < n; ++a)
        if (cv.adj[a][0] < 0) idx[a] = m++;
    ColouredView out;
    out.colours = cv.colours;
    out.adj.assign(m, std::vector<int>(rank + 1, -1));
    for (int a = 0; a < n; ++a) {
        if (idx[a] < 0) continue;
        for (int c = 1; c <= rank; ++c) {
            int cur = cv.adj[a][c];
            while (cv.adj[cur][0] >= 0) cur = cv.adj[cv.adj[cur][0]][c];
            out.adj[idx[a]][c] = idx[cur];
        }
    }
    return out;
}

}  // namespace

Rational gurau_degree_capped(const TwoGraph& g, int rank) {
    const auto cv = capped_view(coloured_view(g, rank));
    std::vector<int> cs(rank + 1);
    std::iota(cs.begin(), cs.end(), 0);
    return jacket_degree(cv, cs);
}

Rational gurau_degree_open(const TwoGraph& g, int rank) {
    if (uncoloured_map(g, rank)) return genus(g);
    const auto cv = coloured_view(g, rank);
    const auto bv = boundary_view(cv);
    const long n = static_cast<long>(cv.adj.size());
    if (n == 0 || rank < 2) return 0;
    long internal_legs = 0;
    for (const auto& a : cv.adj)
        if (a[0] >= 0) ++internal_legs;
    std::vector<int> all(rank + 1);
    std::iota(all.begin(), all.end(), 0);
    const long C = graph_components(cv, all);
    const long E = rank * n / 2 + internal_legs / 2;
    std::vector<int> cs(rank);
    std::iota(cs.begin(), cs.end(), 1);
    Rational total = 0;
    do {
        if (rank > 1 && cs.front() > cs.back()) continue;  // reversal representative
        // cyclic order 0, cs[0], ..., cs[rank-1]; broken faces next to 0 are closed by pinching
        long F = bicoloured_cycles(cv, 0, cs.front()) + bicoloured_cycles(cv, 0, cs.back()) +
                 bicoloured_cycles(bv, cs.front(), cs.back());
        for (int i = 0; i + 1 < rank; ++i) F += bicoloured_cycles(cv, cs[i], cs[i + 1]);
        total += Rational(2 * C - n + E - F, 2);
    } while (std::next_permutation(cs.begin(), cs.end()));
    return total;
}

Rational gurau_degree_boundary(const TwoGraph& g, int rank) {
    const auto bv = boundary_view(coloured_view(g, rank));
    std::vector<int> cs(rank);
    std::iota(cs.begin(), cs.end(), 1);
    return jacket_degree(bv, cs);
}

TwoGraph cap_boundary(const TwoGraph& g) {
    // one new vertex per boundary component, carrying that component's graph
    const auto ext_h = external_half_edges(g);
    if (ext_h.empty()) return g;
    TwoGraph out = g;
    const TwoGraph res = residue(g);  // res half-edges/strands = external ones, in index order
    const auto ext_s = external_strands(g);
    const int H0 = static_cast<int>(g.num_half_edges()), S0 = static_cast<int>(g.num_strands());
    std::vector<int> res_h_index(g.num_half_edges(), -1);
    for (std::size_t i = 0; i < ext_h.size(); ++i) res_h_index[ext_h[i]] = static_cast<int>(i);
    // boundary components over external half-edges (residue index order)
    const int B = static_cast<int>(ext_h.size());
    std::vector<int> comp(B);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (std::size_t j = 0; j < res.num_strands(); ++j) comp[find(res.mu[j])] = find(res.mu[res.sigma1[j]]);
    std::map<int, int> root_id;
    for (int i = 0; i < B; ++i) comp[i] = root_id.emplace(find(i), static_cast<int>(root_id.size())).first->second;
    const int K = static_cast<int>(root_id.size());
    const int V0 = static_cast<int>(g.num_vertices());
    for (int k = 0; k < K; ++k) out.vertex_labels.push_back("cap" + std::to_string(k + 1));
    for (std::size_t i = 0; i < ext_h.size(); ++i) {
        const int h = ext_h[i];
        out.half_edge_labels.push_back(g.half_edge_labels[h] + "'");
        out.nu.push_back(V0 + comp[i]);
        out.iota.push_back(h);
        out.iota[h] = H0 + static_cast<int>(i);
    }
    std::vector<int> s_index(g.num_strands(), -1);
    for (std::size_t j = 0; j < ext_s.size(); ++j) s_index[ext_s[j]] = static_cast<int>(j);
    for (std::size_t j = 0; j < ext_s.size(); ++j) {
        const int s = ext_s[j];
        out.strand_labels.push_back(g.strand_labels[s] + "'");
        out.mu.push_back(H0 + res_h_index[g.mu[s]]);
        if (g.has_tags()) out.tags.push_back(g.tags[s]);
        out.sigma2.push_back(s);
        out.sigma2[s] = S0 + static_cast<int>(j);
        out.sigma1.push_back(-1);
    }
    for (std::size_t j = 0; j < ext_s.size(); ++j) {
        out.sigma1[S0 + j] = S0 + s_index[ext_s[res.sigma1[j]]];
    }
    return out;
}

// ------------------------------------------------------------- closed forms

namespace {

struct CountData {
    long V, E, F, V_b, K, sum_degrees;
    Rational sum_weights;
};

CountData count_data(const Theory& t, const TwoGraph& g) {
    CountData c;
    c.V = static_cast<long>(g.num_vertices());
    c.E = static_cast<long>(num_edges(g));
    c.F = static_cast<long>(internal_face_count(g));
    c.V_b = static_cast<long>(boundary_vertex_count(g));
    c.K = static_cast<long>(boundary_component_count(g));
    c.sum_degrees = static_cast<long>(g.num_half_edges());
    c.sum_weights = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        c.sum_weights += t.vertex_weight(vertex_graph(g, static_cast<int>(v)));
    return c;
}

}  // namespace

Rational matrix_degree_closed_form(const Theory& t, const TwoGraph& g) {
    const long gg = genus(g);
    const auto c = count_data(t, g);
    const Rational d = t.dimension, zeta = t.propagator.weight;
    return -d * (c.V - 1) + (d - zeta) / 2 * (c.sum_degrees - c.V_b) - d * (2 * gg + c.K - 1) + c.sum_weights;
}

Rational tensorial_degree_closed_form(const Theory& t, const TwoGraph& g) {
    if (t.rank < 2) throw std::invalid_argument("tensorial closed form needs a rank");
    if (!is_connected(g)) throw std::invalid_argument("closed form needs a connected graph");
    const auto c = count_data(t, g);
    const Rational dr = t.d_r(), d = t.dimension, zeta = t.propagator.weight;
    const Rational wg = gurau_degree_open(g, t.rank), wb = gurau_degree_boundary(g, t.rank);
    Rational fact = 1;
    for (int i = 2; i <= t.rank - 1; ++i) fact *= i;
    return (dr - zeta) / 2 * (c.sum_degrees - c.V_b) - dr * (c.V - 1) -
           d * ((2 * wg - 2 * wb) / fact + c.K - 1) + c.sum_weights;
}

Rational tensorial_degree_reduced(const Theory& t, const TwoGraph& g) {
    if (t.rank < 2) throw std::invalid_argument("tensorial closed form needs a rank");
    const Rational dr = t.d_r(), d = t.dimension;
    const long Vb = static_cast<long>(boundary_vertex_count(g)), K = static_cast<long>(boundary_component_count(g));
    Rational fact = 1;
    for (int i = 2; i <= t.rank - 1; ++i) fact *= i;
    const Rational wg = gurau_degree_open(g, t.rank), wb = gurau_degree_boundary(g, t.rank);
    return dr - (dr - t.zeta) / 2 * Vb - d * ((2 * wg - 2 * wb) / fact + K - 1);
}

Rational bgr_degree_display(const TwoGraph& g) {
    const long Vb = static_cast<long>(boundary_vertex_count(g)), K = static_cast<long>(boundary_component_count(g));
    const Rational wg = gurau_degree_open(g, 4), wb = gurau_degree_boundary(g, 4);
    return Rational(6 - Vb) - (wg - wb) / 3 - Rational(K - 1);
}

// ------------------------------------------------------------ classification

DivergenceReport classify(const Theory& t, const TwoGraph& g) {
    DivergenceReport r;
    r.divergent = is_bridgeless(g);
    bool any_nontrivial = false;
    for (const auto& comp : connected_components(g)) {
        ComponentReport c;
        c.omega_sd = superficial_degree(t, comp);
        c.V = static_cast<long>(comp.num_vertices());
        c.E = static_cast<long>(num_edges(comp));
        c.F = static_cast<long>(internal_face_count(comp));
        c.V_boundary = static_cast<long>(boundary_vertex_count(comp));
        c.E_boundary = static_cast<long>(boundary_edge_count(comp));
        c.K_boundary = static_cast<long>(boundary_component_count(comp));
        c.bridgeless = is_bridgeless(comp);
        c.code = canonical_form(comp);
        c.boundary_code = canonical_form(boundary(comp));
        if (is_map_class(comp)) {
            try {
                c.genus = genus(comp);
            } catch (const std::invalid_argument&) {
            }
        }
        if (t.rank >= 2 && strand_colours(comp, t.rank)) {
            c.gurau = gurau_degree_open(comp, t.rank);
            c.gurau_boundary = gurau_degree_boundary(comp, t.rank);
            c.gurau_capped = gurau_degree_capped(comp, t.rank);
        }
        // vacuum graphs (no external legs) are not counted as divergent
        c.divergent = c.E > 0 && c.V_boundary > 0 && c.bridgeless && c.omega_sd >= 0;
        if (c.E > 0) {
            any_nontrivial = true;
            if (!c.divergent) r.divergent = false;
        }
        r.components.push_back(std::move(c));
    }
    if (!any_nontrivial) r.divergent = false;
    return r;
}

bool is_superficially_divergent(const Theory& t, const TwoGraph& g) { return classify(t, g).divergent; }

std::vector<TwoGraph> divergent_set(const Theory& t, int max_edges) {
    std::vector<TwoGraph> out;
    for (auto& e : enumerate(t, max_edges, true))
        if (is_superficially_divergent(t, e.graph)) out.push_back(e.graph);
    return out;
}

RenormalizabilityReport renormalizability_check(const Theory& t, int max_edges) {
    RenormalizabilityReport rep;
    std::map<std::string, std::pair<Rational, CanonicalCode>> by_invariants;
    for (auto& e : enumerate(t, max_edges, true)) {
        const auto& g = e.graph;
        if (num_edges(g) == 0) continue;
        ++rep.graphs_checked;
        const Rational face = superficial_degree(t, g);
        std::optional<Rational> closed;
        std::ostringstream key;
        const auto c = count_data(t, g);
        key << c.V << '/' << c.sum_degrees << '/' << c.V_b << '/' << c.K << '/' << c.sum_weights;
        if (!is_single_trace(g)) {
            // closed forms assume connected vertex graphs
        } else if (t.rank == 2 && is_map_class(g)) {
            closed = matrix_degree_closed_form(t, g);
            key << "/g" << genus(g);
        } else if (t.rank > 2 && strand_colours(g, t.rank)) {
            closed = tensorial_degree_closed_form(t, g);
            key << "/w" << gurau_degree_open(g, t.rank) << '/' << gurau_degree_boundary(g, t.rank);
        }
        if (closed && *closed != face) {
            ++rep.formula_mismatches;
            rep.counterexamples.push_back("closed form " + closed->str() + " vs face count " + face.str() +
                                          " on " + e.code);
        }
        if (!closed) continue;
        auto [it, fresh] = by_invariants.emplace(key.str(), std::make_pair(face, e.code));
        if (!fresh && it->second.first != face) {
            ++rep.invariant_conflicts;
            rep.counterexamples.push_back("same invariants, degrees " + it->second.first.str() + " and " +
                                          face.str() + ": " + it->second.second + " / " + e.code);
        }
    }
    return rep;
}

}  // namespace strandhopf
