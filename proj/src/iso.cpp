#include "strandhopf/iso.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "canon.hpp"

namespace strandhopf {

namespace {

using detail::Structure;

std::string join_ints(char prefix, const std::vector<int>& xs) {
    std::string s(1, prefix);
    s += ':';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xs[i]);
    }
    return s;
}

std::vector<int> split_ints(const std::string& s, char prefix) {
    if (s.size() < 2 || s[0] != prefix || s[1] != ':') throw std::invalid_argument("not a canonical code: " + s);
    std::vector<int> out;
    std::size_t i = 2;
    while (i < s.size()) {
        std::size_t j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        out.push_back(std::stoi(s.substr(i, j - i)));
        i = j + 1;
    }
    return out;
}

std::vector<int> inverse(const std::vector<int>& pos) {
    std::vector<int> inv(pos.size());
    for (std::size_t x = 0; x < pos.size(); ++x) inv[pos[x]] = static_cast<int>(x);
    return inv;
}

// ---- 1-graphs ----

struct OneCtx {
    const OneGraph* g;
    bool tags;
};

std::vector<int> encode_one(const void* p, const std::vector<int>& pos) {
    const auto& c = *static_cast<const OneCtx*>(p);
    const auto& g = *c.g;
    const int V = static_cast<int>(g.num_vertices()), H = static_cast<int>(g.num_half_edges());
    const auto at = inverse(pos);
    std::vector<int> code{V, H, c.tags ? 1 : 0};
    for (int p2 = V; p2 < V + H; ++p2) {
        const int h = at[p2] - V;
        code.push_back(pos[g.attach[h]]);
        code.push_back(pos[V + g.pairing[h]] - V);
        if (c.tags) code.push_back(g.tags[h]);
    }
    return code;
}

Structure one_structure(const OneGraph& g, bool tags) {
    Structure st;
    const int V = static_cast<int>(g.num_vertices()), H = static_cast<int>(g.num_half_edges());
    st.n = V + H;
    st.colour.assign(st.n, 0);
    st.arcs.assign(st.n, {});
    for (int h = 0; h < H; ++h) {
        const bool fixed = g.pairing[h] == h;
        st.colour[V + h] = 1 + (fixed ? 0 : 1) + (tags ? 2 * (g.tags[h] + 1) : 0);
        st.arcs[V + h].push_back({0, g.attach[h]});
        st.arcs[g.attach[h]].push_back({1, V + h});
        if (!fixed) st.arcs[V + h].push_back({2, V + g.pairing[h]});
    }
    return st;
}

OneGraphCanon canonical_one_connected(const OneGraph& g, bool tags, bool keep) {
    OneCtx ctx{&g, tags};
    const auto st = one_structure(g, tags);
    auto res = detail::canonicalize(st, &encode_one, &ctx, keep);
    OneGraphCanon out;
    out.code = join_ints('O', encode_one(&ctx, res.best));
    out.aut = res.optimal_count;
    if (keep) {
        const int V = static_cast<int>(g.num_vertices());
        for (auto& pos : res.optimal) {
            out.vertex_pos.emplace_back(pos.begin(), pos.begin() + V);
            std::vector<int> hp;
            for (std::size_t i = V; i < pos.size(); ++i) hp.push_back(pos[i] - V);
            out.half_edge_pos.push_back(std::move(hp));
        }
    }
    return out;
}

std::uint64_t factorial(std::uint64_t m) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= m; ++i) f *= i;
    return f;
}

// ---- 2-graphs ----

struct TwoCtx {
    const TwoGraph* g;
    bool tags;
};

std::vector<int> encode_two(const void* p, const std::vector<int>& pos) {
    const auto& c = *static_cast<const TwoCtx*>(p);
    const auto& g = *c.g;
    const int V = static_cast<int>(g.num_vertices()), H = static_cast<int>(g.num_half_edges()),
              S = static_cast<int>(g.num_strands());
    const auto at = inverse(pos);
    std::vector<int> code{V, H, S};
    code.reserve(3 + 2 * H + 4 * S);
    for (int q = V; q < V + H; ++q) {
        const int h = at[q] - V;
        code.push_back(pos[g.nu[h]]);
        code.push_back(pos[V + g.iota[h]] - V);
    }
    for (int q = V + H; q < V + H + S; ++q) {
        const int s = at[q] - V - H;
        code.push_back(pos[V + g.mu[s]] - V);
        code.push_back(pos[V + H + g.sigma1[s]] - V - H);
        code.push_back(pos[V + H + g.sigma2[s]] - V - H);
        if (c.tags) code.push_back(g.tags[s]);
    }
    return code;
}

Structure two_structure(const TwoGraph& g, bool tags) {
    Structure st;
    const int V = static_cast<int>(g.num_vertices()), H = static_cast<int>(g.num_half_edges()),
              S = static_cast<int>(g.num_strands());
    st.n = V + H + S;
    st.colour.assign(st.n, 0);
    st.arcs.assign(st.n, {});
    for (int h = 0; h < H; ++h) {
        const bool fixed = g.iota[h] == h;
        st.colour[V + h] = fixed ? 1 : 2;
        st.arcs[V + h].push_back({0, g.nu[h]});
        st.arcs[g.nu[h]].push_back({1, V + h});
        if (!fixed) st.arcs[V + h].push_back({4, V + g.iota[h]});
    }
    for (int s = 0; s < S; ++s) {
        const int x = V + H + s;
        const bool fixed = g.sigma2[s] == s;
        st.colour[x] = (fixed ? 3 : 4) + (tags ? 2 * (g.tags[s] + 1) : 0);
        st.arcs[x].push_back({2, V + g.mu[s]});
        st.arcs[V + g.mu[s]].push_back({3, x});
        st.arcs[x].push_back({5, V + H + g.sigma1[s]});
        if (!fixed) st.arcs[x].push_back({6, V + H + g.sigma2[s]});
    }
    return st;
}

// Tagged codes use the prefix K and carry one tag per strand.
TwoGraphCanon canonical_two_connected(const TwoGraph& g, bool tags) {
    const TwoCtx ctx{&g, tags};
    const auto st = two_structure(g, tags);
    auto res = detail::canonicalize(st, &encode_two, &ctx, false);
    return {join_ints(tags ? 'K' : 'T', encode_two(&ctx, res.best)), res.optimal_count};
}

}  // namespace

// ------------------------------------------------------------------ public

OneGraphCanon canonical_one(const OneGraph& g, bool use_tags, bool keep) {
    if (use_tags && !g.has_tags() && g.num_half_edges() > 0)
        throw std::invalid_argument("tags requested on an untagged graph");
    auto comps = connected_components(g);
    if (comps.size() <= 1 || keep) return canonical_one_connected(g, use_tags, keep);
    std::vector<OneGraphCanon> cs;
    for (auto& c : comps) cs.push_back(canonical_one_connected(c, use_tags, false));
    std::sort(cs.begin(), cs.end(), [](auto& a, auto& b) { return a.code < b.code; });
    OneGraphCanon out;
    std::map<std::string, std::uint64_t> mult;
    out.aut = 1;
    for (auto& c : cs) {
        out.code += (out.code.empty() ? "" : "|") + c.code;
        out.aut *= c.aut;
        ++mult[c.code];
    }
    for (auto& [k, m] : mult) out.aut *= factorial(m);
    return out;
}

CanonicalCode canonical_form(const OneGraph& g, bool use_tags) { return canonical_one(g, use_tags).code; }

std::uint64_t one_graph_automorphism_count(const OneGraph& g) { return canonical_one(g).aut; }

bool are_isomorphic(const OneGraph& a, const OneGraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_half_edges() != b.num_half_edges()) return false;
    return canonical_form(a) == canonical_form(b);
}

TwoGraphCanon canonical_two(const TwoGraph& g, bool use_tags) {
    if (use_tags && !g.has_tags() && g.num_strands() > 0)
        throw std::invalid_argument("tags requested on an untagged graph");
    auto comps = connected_components(g);
    if (comps.size() <= 1) return canonical_two_connected(g, use_tags);
    std::vector<TwoGraphCanon> cs;
    for (auto& c : comps) cs.push_back(canonical_two_connected(c, use_tags));
    std::sort(cs.begin(), cs.end(), [](auto& a, auto& b) { return a.code < b.code; });
    TwoGraphCanon out;
    std::map<std::string, std::uint64_t> mult;
    for (auto& c : cs) {
        out.code += (out.code.empty() ? "" : "|") + c.code;
        out.aut *= c.aut;
        ++mult[c.code];
    }
    for (auto& [k, m] : mult) out.aut *= factorial(m);
    return out;
}

CanonicalCode canonical_form(const TwoGraph& g, bool use_tags) { return canonical_two(g, use_tags).code; }

std::uint64_t automorphism_count(const TwoGraph& g) { return canonical_two(g).aut; }

bool are_isomorphic(const TwoGraph& a, const TwoGraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_half_edges() != b.num_half_edges() ||
        a.num_strands() != b.num_strands())
        return false;
    return canonical_form(a) == canonical_form(b);
}

namespace {

TwoGraph decode_two_single(const std::string& code) {
    const bool T = !code.empty() && code[0] == 'K';
    const auto xs = split_ints(code, T ? 'K' : 'T');
    if (xs.size() < 3) throw std::invalid_argument("short code");
    const int V = xs[0], H = xs[1], S = xs[2];
    if (static_cast<int>(xs.size()) != 3 + 2 * H + (T ? 4 : 3) * S) throw std::invalid_argument("malformed code");
    TwoGraph g;
    for (int v = 0; v < V; ++v) g.vertex_labels.push_back("v" + std::to_string(v));
    std::size_t i = 3;
    for (int h = 0; h < H; ++h) {
        g.half_edge_labels.push_back("h" + std::to_string(h));
        g.nu.push_back(xs[i++]);
        g.iota.push_back(xs[i++]);
    }
    for (int s = 0; s < S; ++s) {
        g.strand_labels.push_back("s" + std::to_string(s));
        g.mu.push_back(xs[i++]);
        g.sigma1.push_back(xs[i++]);
        g.sigma2.push_back(xs[i++]);
        if (T) g.tags.push_back(xs[i++]);
    }
    return g;
}

OneGraph decode_one_single(const std::string& code) {
    const auto xs = split_ints(code, 'O');
    if (xs.size() < 3) throw std::invalid_argument("short code");
    const int V = xs[0], H = xs[1], T = xs[2];
    if (static_cast<int>(xs.size()) != 3 + (2 + T) * H) throw std::invalid_argument("malformed code");
    OneGraph g;
    for (int v = 0; v < V; ++v) g.vertex_labels.push_back("u" + std::to_string(v));
    std::size_t i = 3;
    for (int h = 0; h < H; ++h) {
        g.half_edge_labels.push_back("t" + std::to_string(h));
        g.attach.push_back(xs[i++]);
        g.pairing.push_back(xs[i++]);
        if (T) g.tags.push_back(xs[i++]);
    }
    return g;
}

std::vector<std::string> split_bar(const std::string& s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i <= s.size()) {
        std::size_t j = s.find('|', i);
        if (j == std::string::npos) j = s.size();
        out.push_back(s.substr(i, j - i));
        i = j + 1;
    }
    return out;
}

}  // namespace

TwoGraph decode_two(const CanonicalCode& code) {
    std::vector<TwoGraph> parts;
    int k = 0;
    for (auto& piece : split_bar(code)) parts.push_back(relabel_with_prefix(decode_two_single(piece), "c" + std::to_string(k++) + "."));
    if (parts.size() == 1) return decode_two_single(code);
    return disjoint_union(parts);
}

OneGraph decode_one(const CanonicalCode& code) {
    std::vector<OneGraph> parts;
    int k = 0;
    for (auto& piece : split_bar(code)) {
        auto p = decode_one_single(piece);
        if (code.find('|') != std::string::npos) {
            const std::string pre = "c" + std::to_string(k++) + ".";
            for (auto& l : p.vertex_labels) l = pre + l;
            for (auto& l : p.half_edge_labels) l = pre + l;
        }
        parts.push_back(std::move(p));
    }
    return parts.size() == 1 ? parts[0] : disjoint_union(parts);
}

std::vector<OneGraphIso> one_graph_isomorphisms(const OneGraph& a, const OneGraph& b) {
    std::vector<OneGraphIso> out;
    if (a.num_vertices() != b.num_vertices() || a.num_half_edges() != b.num_half_edges()) return out;
    auto ca = canonical_one(a, false, true);
    auto cb = canonical_one(b, false, true);
    if (ca.code != cb.code) return out;
    const auto& va = ca.vertex_pos.front();
    const auto& ha = ca.half_edge_pos.front();
    for (std::size_t k = 0; k < cb.vertex_pos.size(); ++k) {
        const auto vb_inv = inverse(cb.vertex_pos[k]);
        const auto hb_inv = inverse(cb.half_edge_pos[k]);
        OneGraphIso iso;
        for (int p : va) iso.vertex_map.push_back(vb_inv[p]);
        for (int p : ha) iso.half_edge_map.push_back(hb_inv[p]);
        out.push_back(std::move(iso));
    }
    return out;
}

std::vector<CanonicalCode> multiset_code(const std::vector<OneGraph>& ms) {
    std::vector<CanonicalCode> codes;
    for (auto& g : ms) codes.push_back(canonical_form(g));
    std::sort(codes.begin(), codes.end());
    return codes;
}

std::uint64_t boundary_multiset_aut_count(const std::vector<OneGraph>& ms) {
    std::map<std::string, std::uint64_t> mult;
    std::uint64_t total = 1;
    for (auto& g : ms) {
        auto c = canonical_one(g);
        total *= c.aut;
        ++mult[c.code];
    }
    for (auto& [k, m] : mult) total *= factorial(m);
    return total;
}

}  // namespace strandhopf
