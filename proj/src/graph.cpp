#include "strandhopf/graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace strandhopf {

bool label_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
            // strip leading zeros, then compare by length and digits
            std::size_t is = i, js = j;
            while (is + 1 < ie && a[is] == '0') ++is;
            while (js + 1 < je && b[js] == '0') ++js;
            if (ie - is != je - js) return ie - is < je - js;
            for (std::size_t k = 0; k < ie - is; ++k)
                if (a[is + k] != b[js + k]) return a[is + k] < b[js + k];
            if (ie - i != je - j) return ie - i < je - j;
            i = ie;
            j = je;
            continue;
        }
        if (a[i] != b[j]) return a[i] < b[j];
        ++i;
        ++j;
    }
    return a.size() - i < b.size() - j;
}

std::size_t OneGraph::num_edges() const {
    std::size_t n = 0;
    for (std::size_t h = 0; h < pairing.size(); ++h)
        if (pairing[h] > static_cast<int>(h)) ++n;
    return n;
}

namespace {

bool in_range(int x, std::size_t n) { return x >= 0 && static_cast<std::size_t>(x) < n; }

void check_unique(const std::vector<std::string>& labels, const char* what,
                  std::vector<std::string>& out) {
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) out.push_back(std::string("duplicate ") + what + " label " + l);
}

// sort index vector by label order
std::vector<int> order_by_label(const std::vector<std::string>& labels) {
    std::vector<int> idx(labels.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int x, int y) { return label_less(labels[x], labels[y]); });
    return idx;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

// ---------------------------------------------------------------- validate

ValidationReport validate(const OneGraph& g) {
    ValidationReport r;
    auto& v = r.violations;
    const std::size_t H = g.num_half_edges();
    check_unique(g.vertex_labels, "vertex", v);
    check_unique(g.half_edge_labels, "half-edge", v);
    if (g.attach.size() != H) v.push_back("attach not total");
    if (g.pairing.size() != H) v.push_back("pairing not total");
    if (!g.tags.empty() && g.tags.size() != H) v.push_back("tags size mismatch");
    if (v.empty()) {
        for (std::size_t h = 0; h < H; ++h) {
            if (!in_range(g.attach[h], g.num_vertices()))
                v.push_back("attach undefined at " + g.half_edge_labels[h]);
            if (!in_range(g.pairing[h], H))
                v.push_back("pairing undefined at " + g.half_edge_labels[h]);
            else if (g.pairing[g.pairing[h]] != static_cast<int>(h))
                v.push_back("pairing not an involution at " + g.half_edge_labels[h]);
        }
    }
    r.valid = v.empty();
    r.presentations_agree = r.valid;
    return r;
}

ValidationReport validate(const TwoGraph& g) {
    ValidationReport r;
    auto& v = r.violations;
    const std::size_t V = g.num_vertices(), H = g.num_half_edges(), S = g.num_strands();
    check_unique(g.vertex_labels, "vertex", v);
    check_unique(g.half_edge_labels, "half-edge", v);
    check_unique(g.strand_labels, "strand", v);
    if (g.nu.size() != H) v.push_back("nu not total");
    if (g.iota.size() != H) v.push_back("iota not total");
    if (g.mu.size() != S) v.push_back("mu not total");
    if (g.sigma1.size() != S) v.push_back("sigma1 not total");
    if (g.sigma2.size() != S) v.push_back("sigma2 not total");
    if (!g.tags.empty() && g.tags.size() != S) v.push_back("tags size mismatch");
    if (!v.empty()) {
        r.valid = false;
        return r;
    }
    bool maps_ok = true;
    for (std::size_t h = 0; h < H; ++h) {
        if (!in_range(g.nu[h], V)) {
            v.push_back("nu undefined at " + g.half_edge_labels[h]);
            maps_ok = false;
        }
        if (!in_range(g.iota[h], H)) {
            v.push_back("iota undefined at " + g.half_edge_labels[h]);
            maps_ok = false;
        } else if (g.iota[g.iota[h]] != static_cast<int>(h)) {
            v.push_back("iota not an involution at " + g.half_edge_labels[h]);
            maps_ok = false;
        }
    }
    for (std::size_t s = 0; s < S; ++s) {
        const auto& ls = g.strand_labels[s];
        if (!in_range(g.mu[s], H)) {
            v.push_back("mu undefined at " + ls);
            maps_ok = false;
        }
        if (!in_range(g.sigma1[s], S)) {
            v.push_back("sigma1 undefined at " + ls);
            maps_ok = false;
        } else {
            if (g.sigma1[g.sigma1[s]] != static_cast<int>(s)) {
                v.push_back("sigma1 not an involution at " + ls);
                maps_ok = false;
            }
            if (g.sigma1[s] == static_cast<int>(s)) v.push_back("sigma1 fixed point at " + ls);
        }
        if (!in_range(g.sigma2[s], S)) {
            v.push_back("sigma2 undefined at " + ls);
            maps_ok = false;
        } else if (g.sigma2[g.sigma2[s]] != static_cast<int>(s)) {
            v.push_back("sigma2 not an involution at " + ls);
            maps_ok = false;
        }
    }
    if (maps_ok) {
        for (std::size_t s = 0; s < S; ++s) {
            const auto& ls = g.strand_labels[s];
            const int t = g.sigma1[s];
            if (g.nu[g.mu[s]] != g.nu[g.mu[t]]) v.push_back("sigma1 not vertex-local at " + ls);
            const int u = g.sigma2[s];
            const int h = g.mu[s];
            const bool h_fixed = g.iota[h] == h;
            const bool s_fixed = u == static_cast<int>(s);
            if (h_fixed != s_fixed || g.iota[h] != g.mu[u])
                v.push_back("sigma2/iota incompatible at " + ls);
        }
        // edge-set form: every edge must carry a perfect matching of its strands
        for (std::size_t h = 0; h < H; ++h) {
            const int k = g.iota[h];
            if (k <= static_cast<int>(h)) continue;
            std::size_t a = 0, b = 0;
            for (std::size_t s = 0; s < S; ++s) {
                if (g.mu[s] == static_cast<int>(h)) ++a;
                if (g.mu[s] == k) ++b;
            }
            if (a != b)
                v.push_back("sigma2/iota incompatible on edge " + g.half_edge_labels[h] + "-" +
                            g.half_edge_labels[k]);
        }
    }
    // dedupe messages, keep order
    std::vector<std::string> uniq;
    std::set<std::string> seen;
    for (auto& m : v)
        if (seen.insert(m).second) uniq.push_back(m);
    v = std::move(uniq);
    r.valid = v.empty();
    if (r.valid) {
        // Rebuild the pair-set presentation and read the involutions back from it.
        std::vector<int> s1(S, -1), s2(S);
        std::iota(s2.begin(), s2.end(), 0);
        for (auto [a, b] : vertex_strands(g)) {
            s1[a] = b;
            s1[b] = a;
        }
        for (auto [a, b] : edge_strands(g)) {
            s2[a] = b;
            s2[b] = a;
        }
        r.presentations_agree = (s1 == g.sigma1 && s2 == g.sigma2);
    }
    return r;
}

// ------------------------------------------------------------ derived views

std::vector<std::pair<int, int>> edges(const TwoGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t h = 0; h < g.num_half_edges(); ++h) {
        const int k = g.iota[h];
        if (k == static_cast<int>(h)) continue;
        if (label_less(g.half_edge_labels[h], g.half_edge_labels[k]))
            out.emplace_back(static_cast<int>(h), k);
    }
    std::sort(out.begin(), out.end(), [&](auto x, auto y) {
        return label_less(g.half_edge_labels[x.first], g.half_edge_labels[y.first]);
    });
    return out;
}

static std::vector<std::pair<int, int>> pairs_of(const std::vector<int>& inv,
                                                 const std::vector<std::string>& labels) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t s = 0; s < inv.size(); ++s) {
        const int t = inv[s];
        if (t == static_cast<int>(s)) continue;
        if (label_less(labels[s], labels[t])) out.emplace_back(static_cast<int>(s), t);
    }
    std::sort(out.begin(), out.end(),
              [&](auto x, auto y) { return label_less(labels[x.first], labels[y.first]); });
    return out;
}

std::vector<std::pair<int, int>> edge_strands(const TwoGraph& g) {
    return pairs_of(g.sigma2, g.strand_labels);
}

std::vector<std::pair<int, int>> vertex_strands(const TwoGraph& g) {
    return pairs_of(g.sigma1, g.strand_labels);
}

std::vector<int> external_half_edges(const TwoGraph& g) {
    std::vector<int> out;
    for (int h : order_by_label(g.half_edge_labels))
        if (g.iota[h] == h) out.push_back(h);
    return out;
}

std::vector<int> external_strands(const TwoGraph& g) {
    std::vector<int> out;
    for (int s : order_by_label(g.strand_labels))
        if (g.sigma2[s] == s) out.push_back(s);
    return out;
}

std::vector<int> half_edges_at(const TwoGraph& g, int v) {
    std::vector<int> out;
    for (std::size_t h = 0; h < g.num_half_edges(); ++h)
        if (g.nu[h] == v) out.push_back(static_cast<int>(h));
    return out;
}

std::vector<int> strands_at(const TwoGraph& g, int h) {
    std::vector<int> out;
    for (std::size_t s = 0; s < g.num_strands(); ++s)
        if (g.mu[s] == h) out.push_back(static_cast<int>(s));
    return out;
}

std::size_t num_edges(const TwoGraph& g) {
    std::size_t n = 0;
    for (std::size_t h = 0; h < g.num_half_edges(); ++h)
        if (g.iota[h] > static_cast<int>(h)) ++n;
    return n;
}

int find_vertex(const TwoGraph& g, const std::string& label) {
    for (std::size_t i = 0; i < g.num_vertices(); ++i)
        if (g.vertex_labels[i] == label) return static_cast<int>(i);
    return -1;
}

int find_half_edge(const TwoGraph& g, const std::string& label) {
    for (std::size_t i = 0; i < g.num_half_edges(); ++i)
        if (g.half_edge_labels[i] == label) return static_cast<int>(i);
    return -1;
}

// ------------------------------------------------------------ vertex graphs

OneGraph vertex_graph(const TwoGraph& g, int v) {
    if (!in_range(v, g.num_vertices())) throw std::out_of_range("unknown vertex index");
    OneGraph out;
    std::vector<int> local_h(g.num_half_edges(), -1), local_s(g.num_strands(), -1);
    for (std::size_t h = 0; h < g.num_half_edges(); ++h) {
        if (g.nu[h] != v) continue;
        local_h[h] = static_cast<int>(out.vertex_labels.size());
        out.vertex_labels.push_back(g.half_edge_labels[h]);
    }
    for (std::size_t s = 0; s < g.num_strands(); ++s) {
        if (local_h[g.mu[s]] < 0) continue;
        local_s[s] = static_cast<int>(out.half_edge_labels.size());
        out.half_edge_labels.push_back(g.strand_labels[s]);
        out.attach.push_back(local_h[g.mu[s]]);
        if (g.has_tags()) out.tags.push_back(g.tags[s]);
    }
    out.pairing.resize(out.half_edge_labels.size());
    for (std::size_t s = 0; s < g.num_strands(); ++s)
        if (local_s[s] >= 0) out.pairing[local_s[s]] = local_s[g.sigma1[s]];
    return out;
}

OneGraph vertex_graph(const TwoGraph& g, const std::string& v) {
    const int i = find_vertex(g, v);
    if (i < 0) throw std::invalid_argument("unknown vertex " + v);
    return vertex_graph(g, i);
}

std::vector<OneGraph> vertex_graphs_multiset(const TwoGraph& g) {
    std::vector<OneGraph> out;
    out.reserve(g.num_vertices());
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        out.push_back(vertex_graph(g, static_cast<int>(v)));
    return out;
}

namespace {

bool has_duplicates(std::vector<std::string> xs) {
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) != xs.end();
}

// Part k gets the prefix "c<k>." on every label.
void prefix_parts(std::vector<std::string>& labels, const std::vector<std::size_t>& sizes) {
    std::size_t i = 0;
    for (std::size_t k = 0; k < sizes.size(); ++k)
        for (std::size_t j = 0; j < sizes[k]; ++j, ++i) labels[i] = "c" + std::to_string(k + 1) + "." + labels[i];
}

}  // namespace

// Labels are kept when they stay unique, otherwise every part is prefixed.
OneGraph disjoint_union(const std::vector<OneGraph>& parts) {
    OneGraph out;
    bool tagged = !parts.empty();
    for (const auto& p : parts) tagged = tagged && (p.has_tags() || p.num_half_edges() == 0);
    for (const auto& p : parts) {
        const int vo = static_cast<int>(out.vertex_labels.size());
        const int ho = static_cast<int>(out.half_edge_labels.size());
        out.vertex_labels.insert(out.vertex_labels.end(), p.vertex_labels.begin(),
                                 p.vertex_labels.end());
        out.half_edge_labels.insert(out.half_edge_labels.end(), p.half_edge_labels.begin(),
                                    p.half_edge_labels.end());
        for (int a : p.attach) out.attach.push_back(a + vo);
        for (int q : p.pairing) out.pairing.push_back(q + ho);
        if (tagged) out.tags.insert(out.tags.end(), p.tags.begin(), p.tags.end());
    }
    if (out.half_edge_labels.empty()) out.tags.clear();
    if (has_duplicates(out.vertex_labels) || has_duplicates(out.half_edge_labels)) {
        std::vector<std::size_t> nv, nh;
        for (const auto& p : parts) {
            nv.push_back(p.num_vertices());
            nh.push_back(p.num_half_edges());
        }
        prefix_parts(out.vertex_labels, nv);
        prefix_parts(out.half_edge_labels, nh);
    }
    return out;
}

OneGraph vertex_graphs_union(const TwoGraph& g) { return disjoint_union(vertex_graphs_multiset(g)); }

// ------------------------------------------------------------------- faces

namespace {

std::vector<int> walk_from(const TwoGraph& g, int start) {
    // s1, sigma1, sigma2, sigma1, ... until a sigma2 fixed point or back at start
    std::vector<int> seq{start};
    int cur = start;
    for (;;) {
        const int a = g.sigma1[cur];
        seq.push_back(a);
        const int b = g.sigma2[a];
        if (b == a || b == start) break;
        seq.push_back(b);
        cur = b;
        if (seq.size() > 2 * g.num_strands() + 2) throw std::logic_error("face walk does not close");
    }
    return seq;
}

bool seq_less(const TwoGraph& g, const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [&](int x, int y) {
        return label_less(g.strand_labels[x], g.strand_labels[y]);
    });
}

}  // namespace

FaceSet faces(const TwoGraph& g) {
    FaceSet fs;
    std::vector<char> seen(g.num_strands(), 0);
    for (int s : order_by_label(g.strand_labels)) {
        if (seen[s] || g.sigma2[s] != s) continue;
        auto seq = walk_from(g, s);
        if (label_less(g.strand_labels[seq.back()], g.strand_labels[seq.front()]))
            std::reverse(seq.begin(), seq.end());
        for (int x : seq) seen[x] = 1;
        fs.external.push_back({false, std::move(seq)});
    }
    for (int s : order_by_label(g.strand_labels)) {
        if (seen[s]) continue;
        auto seq = walk_from(g, s);
        for (int x : seq) seen[x] = 1;
        // least representative among all starting points (either direction)
        std::vector<int> best = seq;
        for (int x : seq) {
            auto cand = walk_from(g, x);
            if (seq_less(g, cand, best)) best = std::move(cand);
        }
        fs.internal.push_back({true, std::move(best)});
    }
    auto by_seq = [&](const Face& a, const Face& b) { return seq_less(g, a.sections, b.sections); };
    std::sort(fs.external.begin(), fs.external.end(), by_seq);
    std::sort(fs.internal.begin(), fs.internal.end(), by_seq);
    return fs;
}

std::size_t internal_face_count(const TwoGraph& g) {
    std::vector<char> seen(g.num_strands(), 0);
    for (std::size_t s = 0; s < g.num_strands(); ++s) {
        if (seen[s] || g.sigma2[s] != static_cast<int>(s)) continue;
        for (int x : walk_from(g, static_cast<int>(s))) seen[x] = 1;
    }
    std::size_t n = 0;
    for (std::size_t s = 0; s < g.num_strands(); ++s) {
        if (seen[s]) continue;
        for (int x : walk_from(g, static_cast<int>(s))) seen[x] = 1;
        ++n;
    }
    return n;
}

// --------------------------------------------------------------- structure

std::pair<std::vector<int>, int> vertex_components(const TwoGraph& g) {
    UnionFind uf(g.num_vertices());
    for (std::size_t h = 0; h < g.num_half_edges(); ++h) uf.unite(g.nu[h], g.nu[g.iota[h]]);
    std::vector<int> comp(g.num_vertices(), -1);
    int n = 0;
    std::vector<int> root_id(g.num_vertices(), -1);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        const int r = uf.find(static_cast<int>(v));
        if (root_id[r] < 0) root_id[r] = n++;
        comp[v] = root_id[r];
    }
    return {comp, n};
}

namespace {

TwoGraph induced(const TwoGraph& g, const std::vector<char>& keep_vertex) {
    TwoGraph out;
    std::vector<int> nv(g.num_vertices(), -1), nh(g.num_half_edges(), -1), ns(g.num_strands(), -1);
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (keep_vertex[v]) {
            nv[v] = static_cast<int>(out.vertex_labels.size());
            out.vertex_labels.push_back(g.vertex_labels[v]);
        }
    for (std::size_t h = 0; h < g.num_half_edges(); ++h)
        if (nv[g.nu[h]] >= 0) {
            nh[h] = static_cast<int>(out.half_edge_labels.size());
            out.half_edge_labels.push_back(g.half_edge_labels[h]);
            out.nu.push_back(nv[g.nu[h]]);
        }
    for (std::size_t s = 0; s < g.num_strands(); ++s)
        if (nh[g.mu[s]] >= 0) {
            ns[s] = static_cast<int>(out.strand_labels.size());
            out.strand_labels.push_back(g.strand_labels[s]);
            out.mu.push_back(nh[g.mu[s]]);
            if (g.has_tags()) out.tags.push_back(g.tags[s]);
        }
    for (std::size_t h = 0; h < g.num_half_edges(); ++h)
        if (nh[h] >= 0) out.iota.push_back(nh[g.iota[h]]);
    for (std::size_t s = 0; s < g.num_strands(); ++s)
        if (ns[s] >= 0) {
            out.sigma1.push_back(ns[g.sigma1[s]]);
            out.sigma2.push_back(ns[g.sigma2[s]]);
        }
    return out;
}

}  // namespace

std::vector<TwoGraph> connected_components(const TwoGraph& g) {
    auto [comp, n] = vertex_components(g);
    std::vector<TwoGraph> out;
    out.reserve(n);
    for (int c = 0; c < n; ++c) {
        std::vector<char> keep(g.num_vertices(), 0);
        for (std::size_t v = 0; v < g.num_vertices(); ++v) keep[v] = comp[v] == c;
        out.push_back(induced(g, keep));
    }
    return out;
}

bool is_connected(const TwoGraph& g) { return vertex_components(g).second <= 1; }

bool is_bridgeless(const TwoGraph& g) {
    const int base = vertex_components(g).second;
    for (auto [h, k] : edges(g)) {
        if (g.nu[h] == g.nu[k]) continue;
        TwoGraph t = g;
        t.iota[h] = h;
        t.iota[k] = k;
        if (vertex_components(t).second > base) return false;
    }
    return true;
}

long euler_characteristic(const TwoGraph& g) {
    return static_cast<long>(g.num_vertices()) - static_cast<long>(num_edges(g)) +
           static_cast<long>(internal_face_count(g));
}

std::pair<std::vector<int>, int> components(const OneGraph& g) {
    UnionFind uf(g.num_vertices());
    for (std::size_t h = 0; h < g.num_half_edges(); ++h)
        uf.unite(g.attach[h], g.attach[g.pairing[h]]);
    std::vector<int> comp(g.num_vertices(), -1), root_id(g.num_vertices(), -1);
    int n = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        const int r = uf.find(static_cast<int>(v));
        if (root_id[r] < 0) root_id[r] = n++;
        comp[v] = root_id[r];
    }
    return {comp, n};
}

std::vector<OneGraph> connected_components(const OneGraph& g) {
    auto [comp, n] = components(g);
    std::vector<OneGraph> out(n);
    std::vector<int> nv(g.num_vertices()), nh(g.num_half_edges());
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        nv[v] = static_cast<int>(out[comp[v]].vertex_labels.size());
        out[comp[v]].vertex_labels.push_back(g.vertex_labels[v]);
    }
    for (std::size_t h = 0; h < g.num_half_edges(); ++h) {
        auto& o = out[comp[g.attach[h]]];
        nh[h] = static_cast<int>(o.half_edge_labels.size());
        o.half_edge_labels.push_back(g.half_edge_labels[h]);
        o.attach.push_back(nv[g.attach[h]]);
        if (g.has_tags()) o.tags.push_back(g.tags[h]);
    }
    for (std::size_t h = 0; h < g.num_half_edges(); ++h)
        out[comp[g.attach[h]]].pairing.push_back(nh[g.pairing[h]]);
    return out;
}

TwoGraph restrict_edges(const TwoGraph& g, const std::vector<bool>& keep) {
    TwoGraph out = g;
    for (std::size_t h = 0; h < g.num_half_edges(); ++h) {
        const int k = g.iota[h];
        if (k == static_cast<int>(h)) continue;
        if (!(keep[h] || keep[k])) out.iota[h] = static_cast<int>(h);
    }
    for (std::size_t s = 0; s < g.num_strands(); ++s)
        if (out.iota[g.mu[s]] == g.mu[s]) out.sigma2[s] = static_cast<int>(s);
    return out;
}

TwoGraph skeleton(const TwoGraph& g) {
    return restrict_edges(g, std::vector<bool>(g.num_half_edges(), false));
}

TwoGraph contract_edges(const TwoGraph& g, const std::vector<bool>& in_sub) {
    const std::size_t V = g.num_vertices(), H = g.num_half_edges(), S = g.num_strands();
    std::vector<char> inner(H, 0);
    for (std::size_t h = 0; h < H; ++h) {
        const int k = g.iota[h];
        if (k != static_cast<int>(h) && (in_sub[h] || in_sub[k])) inner[h] = inner[k] = 1;
    }
    UnionFind uf(V);
    for (std::size_t h = 0; h < H; ++h)
        if (inner[h]) uf.unite(g.nu[h], g.nu[g.iota[h]]);
    std::vector<int> comp(V), root_id(V, -1);
    std::vector<std::vector<int>> members;
    for (std::size_t v = 0; v < V; ++v) {
        const int r = uf.find(static_cast<int>(v));
        if (root_id[r] < 0) {
            root_id[r] = static_cast<int>(members.size());
            members.emplace_back();
        }
        comp[v] = root_id[r];
        members[comp[v]].push_back(static_cast<int>(v));
    }
    TwoGraph out;
    for (auto& m : members) {
        if (m.size() == 1) {
            out.vertex_labels.push_back(g.vertex_labels[m[0]]);
            continue;
        }
        std::vector<std::string> ls;
        for (int v : m) ls.push_back(g.vertex_labels[v]);
        std::sort(ls.begin(), ls.end(), label_less);
        std::string joined;
        for (auto& l : ls) joined += (joined.empty() ? "" : "+") + l;
        out.vertex_labels.push_back(joined);
    }
    std::vector<int> nh(H, -1), ns(S, -1);
    for (std::size_t h = 0; h < H; ++h)
        if (!inner[h]) {
            nh[h] = static_cast<int>(out.half_edge_labels.size());
            out.half_edge_labels.push_back(g.half_edge_labels[h]);
            out.nu.push_back(comp[g.nu[h]]);
        }
    for (std::size_t s = 0; s < S; ++s)
        if (nh[g.mu[s]] >= 0) {
            ns[s] = static_cast<int>(out.strand_labels.size());
            out.strand_labels.push_back(g.strand_labels[s]);
            out.mu.push_back(nh[g.mu[s]]);
            if (g.has_tags()) out.tags.push_back(g.tags[s]);
        }
    for (std::size_t h = 0; h < H; ++h)
        if (nh[h] >= 0) out.iota.push_back(nh[g.iota[h]]);
    out.sigma1.assign(out.strand_labels.size(), -1);
    out.sigma2.assign(out.strand_labels.size(), -1);
    for (std::size_t s = 0; s < S; ++s) {
        if (ns[s] < 0) continue;
        out.sigma2[ns[s]] = ns[g.sigma2[s]];
        // follow the subgraph's external face from s to its other end
        int cur = static_cast<int>(s);
        for (;;) {
            const int a = g.sigma1[cur];
            if (!inner[g.mu[a]]) {
                out.sigma1[ns[s]] = ns[a];
                break;
            }
            cur = g.sigma2[a];
        }
    }
    return out;
}

TwoGraph residue(const TwoGraph& g) {
    return contract_edges(g, std::vector<bool>(g.num_half_edges(), true));
}

TwoGraph disjoint_union(const std::vector<TwoGraph>& parts) {
    TwoGraph out;
    bool tagged = !parts.empty();
    for (const auto& p : parts) tagged = tagged && (p.has_tags() || p.num_strands() == 0);
    for (const auto& p : parts) {
        const int vo = static_cast<int>(out.num_vertices());
        const int ho = static_cast<int>(out.num_half_edges());
        const int so = static_cast<int>(out.num_strands());
        out.vertex_labels.insert(out.vertex_labels.end(), p.vertex_labels.begin(), p.vertex_labels.end());
        out.half_edge_labels.insert(out.half_edge_labels.end(), p.half_edge_labels.begin(),
                                    p.half_edge_labels.end());
        out.strand_labels.insert(out.strand_labels.end(), p.strand_labels.begin(), p.strand_labels.end());
        for (int x : p.nu) out.nu.push_back(x + vo);
        for (int x : p.iota) out.iota.push_back(x + ho);
        for (int x : p.mu) out.mu.push_back(x + ho);
        for (int x : p.sigma1) out.sigma1.push_back(x + so);
        for (int x : p.sigma2) out.sigma2.push_back(x + so);
        if (tagged) out.tags.insert(out.tags.end(), p.tags.begin(), p.tags.end());
    }
    if (out.strand_labels.empty()) out.tags.clear();
    if (has_duplicates(out.vertex_labels) || has_duplicates(out.half_edge_labels) || has_duplicates(out.strand_labels)) {
        std::vector<std::size_t> nv, nh, ns;
        for (const auto& p : parts) {
            nv.push_back(p.num_vertices());
            nh.push_back(p.num_half_edges());
            ns.push_back(p.num_strands());
        }
        prefix_parts(out.vertex_labels, nv);
        prefix_parts(out.half_edge_labels, nh);
        prefix_parts(out.strand_labels, ns);
    }
    return out;
}

TwoGraph relabel_with_prefix(const TwoGraph& g, const std::string& prefix) {
    TwoGraph out = g;
    for (auto& l : out.vertex_labels) l = prefix + l;
    for (auto& l : out.half_edge_labels) l = prefix + l;
    for (auto& l : out.strand_labels) l = prefix + l;
    return out;
}

OneGraph boundary(const TwoGraph& g) { return vertex_graphs_union(residue(g)); }

std::vector<OneGraph> boundary_components(const TwoGraph& g) {
    return vertex_graphs_multiset(residue(g));
}

// ------------------------------------------------------------- cell complex

bool CellComplex::less(int lower, int higher) const {
    if (lower == higher) return false;
    std::vector<int> stack{higher};
    std::set<int> seen;
    while (!stack.empty()) {
        const int c = stack.back();
        stack.pop_back();
        for (auto [hi, lo] : covers) {
            if (hi != c) continue;
            if (lo == lower) return true;
            if (seen.insert(lo).second) stack.push_back(lo);
        }
    }
    return false;
}

CellComplex to_complex(const TwoGraph& g) {
    CellComplex cx;
    using K = CellComplex::Kind;
    std::vector<int> vcell(g.num_vertices()), hcell(g.num_half_edges(), -1);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        vcell[v] = static_cast<int>(cx.cells.size());
        cx.cells.push_back({K::vertex, 0, {static_cast<int>(v)}});
    }
    for (auto [h, k] : edges(g)) {
        hcell[h] = hcell[k] = static_cast<int>(cx.cells.size());
        cx.cells.push_back({K::edge, 1, {h, k}});
    }
    for (int h : external_half_edges(g)) {
        hcell[h] = static_cast<int>(cx.cells.size());
        cx.cells.push_back({K::external_edge, 1, {h}});
    }
    const auto fs = faces(g);
    std::vector<int> face_cells;
    for (const auto* set : {&fs.internal, &fs.external})
        for (const auto& f : *set) {
            face_cells.push_back(static_cast<int>(cx.cells.size()));
            cx.cells.push_back({K::face, 2, f.sections});
        }
    std::set<std::pair<int, int>> cov;
    for (std::size_t h = 0; h < g.num_half_edges(); ++h) cov.insert({hcell[h], vcell[g.nu[h]]});
    for (int fc : face_cells)
        for (int s : cx.cells[fc].members) cov.insert({fc, hcell[g.mu[s]]});
    cx.covers.assign(cov.begin(), cov.end());

    std::vector<char> covered(cx.cells.size(), 0), has_lower(cx.cells.size(), 0);
    for (auto [hi, lo] : cx.covers) {
        covered[lo] = 1;
        has_lower[hi] = 1;
    }
    for (std::size_t c = 0; c < cx.cells.size(); ++c) {
        if (cx.cells[c].dim > 0 && !has_lower[c]) cx.pure = false;
        if (cx.cells[c].dim < 2 && !covered[c]) cx.two_dimensional = false;
    }
    // face over vertex must pass through an edge cell
    for (int fc : face_cells)
        for (int s : cx.cells[fc].members) {
            const int vc = vcell[g.nu[g.mu[s]]];
            bool via = false;
            for (auto [hi, lo] : cx.covers)
                if (hi == fc && cov.count({lo, vc})) {
                    via = true;
                    break;
                }
            if (!via) cx.chain_property = false;
        }
    return cx;
}

// ------------------------------------------------------------ constructions

TwoGraph from_combinatorial_map(const std::vector<int>& sigma, const std::vector<int>& iota,
                                const std::vector<std::string>& labels_in) {
    const std::size_t n = sigma.size();
    if (iota.size() != n) throw std::invalid_argument("sigma and iota sizes differ");
    std::vector<char> hit(n, 0);
    for (int x : sigma) {
        if (!in_range(x, n) || hit[x]) throw std::invalid_argument("sigma is not a bijection");
        hit[x] = 1;
    }
    for (std::size_t h = 0; h < n; ++h)
        if (!in_range(iota[h], n) || iota[iota[h]] != static_cast<int>(h))
            throw std::invalid_argument("iota is not an involution");
    std::vector<std::string> labels = labels_in;
    if (labels.empty())
        for (std::size_t h = 0; h < n; ++h) labels.push_back(std::to_string(h + 1));
    if (labels.size() != n) throw std::invalid_argument("label count mismatch");

    TwoGraph g;
    g.half_edge_labels = labels;
    g.nu.assign(n, -1);
    for (std::size_t h = 0; h < n; ++h) {
        if (g.nu[h] >= 0) continue;
        const int v = static_cast<int>(g.vertex_labels.size());
        g.vertex_labels.push_back("v" + labels[h]);
        int x = static_cast<int>(h);
        do {
            g.nu[x] = v;
            x = sigma[x];
        } while (x != static_cast<int>(h));
    }
    g.iota = iota;
    // strand 2h: side of h facing its predecessor; 2h+1: side facing its successor
    for (std::size_t h = 0; h < n; ++h) {
        g.strand_labels.push_back("s:" + labels[h] + ":0");
        g.strand_labels.push_back("s:" + labels[h] + ":1");
        g.mu.push_back(static_cast<int>(h));
        g.mu.push_back(static_cast<int>(h));
        g.tags.push_back(0);
        g.tags.push_back(1);
    }
    g.sigma1.assign(2 * n, -1);
    g.sigma2.assign(2 * n, -1);
    for (std::size_t h = 0; h < n; ++h) {
        const int k = sigma[h];
        g.sigma1[2 * h + 1] = 2 * k;
        g.sigma1[2 * k] = static_cast<int>(2 * h + 1);
        const int j = iota[h];
        if (j == static_cast<int>(h)) {
            g.sigma2[2 * h] = static_cast<int>(2 * h);
            g.sigma2[2 * h + 1] = static_cast<int>(2 * h + 1);
        } else {
            g.sigma2[2 * h] = 2 * j + 1;
            g.sigma2[2 * h + 1] = 2 * j;
        }
    }
    return g;
}

TwoGraph from_coloured_graph(int num_nodes, int rank, const std::vector<ColouredEdge>& cedges,
                             const std::vector<std::string>& node_labels_in) {
    if (num_nodes < 0 || rank < 1) throw std::invalid_argument("bad coloured graph size");
    const int N = num_nodes, R = rank;
    std::vector<std::string> node_labels = node_labels_in;
    if (node_labels.empty())
        for (int i = 0; i < N; ++i) node_labels.push_back("n" + std::to_string(i + 1));
    if (static_cast<int>(node_labels.size()) != N) throw std::invalid_argument("label count mismatch");
    // partner[node][colour]; -2 unset, -1 external (colour 0 only)
    std::vector<std::vector<int>> partner(N, std::vector<int>(R + 1, -2));
    for (const auto& e : cedges) {
        if (e.colour < 0 || e.colour > R) throw std::invalid_argument("colour out of range");
        if (!in_range(e.a, N) || (e.b != -1 && !in_range(e.b, N)))
            throw std::invalid_argument("node out of range");
        if (e.b == -1 && e.colour != 0) throw std::invalid_argument("only colour-0 legs may be external");
        if (e.a == e.b) throw std::invalid_argument("colouring not proper: loop");
        if (partner[e.a][e.colour] != -2 || (e.b >= 0 && partner[e.b][e.colour] != -2))
            throw std::invalid_argument("colouring not proper: repeated colour at a node");
        partner[e.a][e.colour] = e.b;
        if (e.b >= 0) partner[e.b][e.colour] = e.a;
    }
    for (int i = 0; i < N; ++i)
        for (int c = 1; c <= R; ++c)
            if (partner[i][c] == -2) throw std::invalid_argument("degree mismatch: missing colour");
    UnionFind uf(N);
    for (int i = 0; i < N; ++i)
        for (int c = 1; c <= R; ++c) uf.unite(i, partner[i][c]);
    TwoGraph g;
    std::vector<int> root_vertex(N, -1);
    g.half_edge_labels = node_labels;
    for (int i = 0; i < N; ++i) {
        const int r = uf.find(i);
        if (root_vertex[r] < 0) {
            root_vertex[r] = static_cast<int>(g.vertex_labels.size());
            g.vertex_labels.push_back("v" + std::to_string(g.vertex_labels.size() + 1));
        }
        g.nu.push_back(root_vertex[r]);
        const int p = partner[i][0];
        g.iota.push_back(p >= 0 ? p : i);
    }
    auto sid = [R](int node, int c) { return node * R + (c - 1); };
    g.sigma1.assign(static_cast<std::size_t>(N) * R, -1);
    g.sigma2.assign(static_cast<std::size_t>(N) * R, -1);
    for (int i = 0; i < N; ++i)
        for (int c = 1; c <= R; ++c) {
            g.strand_labels.push_back("s:" + node_labels[i] + ":" + std::to_string(c));
            g.mu.push_back(i);
            g.tags.push_back(c);
            g.sigma1[sid(i, c)] = sid(partner[i][c], c);
            const int p = partner[i][0];
            g.sigma2[sid(i, c)] = p >= 0 ? sid(p, c) : sid(i, c);
        }
    return g;
}

std::optional<std::vector<int>> find_colouring(const TwoGraph& g, int rank) {
    const std::size_t H = g.num_half_edges(), S = g.num_strands();
    std::vector<std::vector<int>> at(H);
    for (std::size_t s = 0; s < S; ++s) at[g.mu[s]].push_back(static_cast<int>(s));
    for (auto& a : at)
        if (static_cast<int>(a.size()) != rank) return std::nullopt;
    // every face is monochromatic: colour faces
    std::vector<int> face_of(S, -1);
    int nf = 0;
    for (std::size_t s = 0; s < S; ++s) {
        if (face_of[s] >= 0) continue;
        std::vector<int> stack{static_cast<int>(s)};
        face_of[s] = nf;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y : {g.sigma1[x], g.sigma2[x]})
                if (face_of[y] < 0) {
                    face_of[y] = nf;
                    stack.push_back(y);
                }
        }
        ++nf;
    }
    std::vector<std::vector<int>> conflicts(nf);
    for (auto& a : at)
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j) {
                if (i == j) continue;
                if (face_of[a[i]] == face_of[a[j]]) return std::nullopt;
                conflicts[face_of[a[i]]].push_back(face_of[a[j]]);
            }
    std::vector<int> colour(nf, 0);
    std::function<bool(int)> assign = [&](int f) -> bool {
        if (f == nf) return true;
        for (int c = 1; c <= rank; ++c) {
            bool ok = true;
            for (int o : conflicts[f])
                if (colour[o] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            colour[f] = c;
            if (assign(f + 1)) return true;
            colour[f] = 0;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    std::vector<int> out(S);
    for (std::size_t s = 0; s < S; ++s) out[s] = colour[face_of[s]];
    return out;
}

}  // namespace strandhopf

namespace strandhopf {

TwoGraph single_vertex(const OneGraph& vg, const std::string& label) {
    TwoGraph g;
    g.vertex_labels = {label};
    g.half_edge_labels = vg.vertex_labels;
    g.nu.assign(vg.num_vertices(), 0);
    for (std::size_t h = 0; h < vg.num_vertices(); ++h) g.iota.push_back(static_cast<int>(h));
    g.strand_labels = vg.half_edge_labels;
    g.mu = vg.attach;
    g.sigma1 = vg.pairing;
    for (std::size_t s = 0; s < vg.num_half_edges(); ++s) g.sigma2.push_back(static_cast<int>(s));
    g.tags = vg.tags;
    return g;
}

}  // namespace strandhopf
