#pragma once
// Fixture builders and brute-force oracles shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "strandhopf/graph.hpp"
#include "strandhopf/io.hpp"
#include "strandhopf/iso.hpp"
#include "strandhopf/models.hpp"
#include "strandhopf/rewrite.hpp"

#ifndef STRANDHOPF_FIXTURE_DIR
#define STRANDHOPF_FIXTURE_DIR "tests/fixtures"
#endif

namespace fixtures {

using namespace strandhopf;

inline std::string dir() { return STRANDHOPF_FIXTURE_DIR; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Two rank-4 quartic pillows with distinguished colours c1, c2, glued by two colour-0 edges.
inline TwoGraph fish(int c1, int c2) {
    std::vector<ColouredEdge> es;
    auto pillow = [&](int w1, int b1, int w2, int b2, int c) {
        for (int k = 1; k <= 4; ++k) {
            if (k == c) {
                es.push_back({w1, b2, k});
                es.push_back({b1, w2, k});
            } else {
                es.push_back({w1, b1, k});
                es.push_back({w2, b2, k});
            }
        }
    };
    pillow(0, 1, 2, 3, c1);
    pillow(4, 5, 6, 7, c2);
    es.push_back({2, 5, 0});
    es.push_back({4, 3, 0});
    return from_coloured_graph(8, 4, es, {"w1", "b1", "w2", "b2", "w3", "b3", "w4", "b4"});
}

// Pillow with a colour-0 loop across its non-distinguished pair: melonic 2-point graph.
inline TwoGraph melon_tadpole() {
    std::vector<ColouredEdge> es;
    for (int k = 1; k <= 4; ++k) {
        if (k == 1) {
            es.push_back({0, 3, k});
            es.push_back({1, 2, k});
        } else {
            es.push_back({0, 1, k});
            es.push_back({2, 3, k});
        }
    }
    es.push_back({2, 3, 0});
    return from_coloured_graph(4, 4, es, {"w1", "b1", "w2", "b2"});
}

// Two rank-3 melon vertices joined by two colour-0 edges (closed).
inline TwoGraph elementary_melon_r3() {
    std::vector<ColouredEdge> es;
    for (int k = 1; k <= 3; ++k) {
        es.push_back({0, 1, k});
        es.push_back({2, 3, k});
    }
    es.push_back({0, 3, 0});
    es.push_back({1, 2, 0});
    return from_coloured_graph(4, 3, es, {"a1", "a2", "b1", "b2"});
}

inline TwoGraph map_from_degrees(const std::vector<int>& degrees, const std::vector<int>& iota) {
    std::vector<int> sigma;
    int offset = 0;
    for (int d : degrees) {
        for (int i = 0; i < d; ++i) sigma.push_back(offset + (i + 1) % d);
        offset += d;
    }
    return from_combinatorial_map(sigma, iota);
}

// Planar quartic two-vertex map with one internal face.
inline TwoGraph gw_fish() { return map_from_degrees({4, 4}, {4, 7, 2, 3, 0, 5, 6, 1}); }

// Hexagon vertex with three opposite self-loops: genus one.
inline TwoGraph torus() { return map_from_degrees({6}, {3, 4, 5, 0, 1, 2}); }

// Closed genus-one map; contracting its cylinder subgraph gives a pinched torus.
inline TwoGraph pinched_torus_parent() {
    return map_from_degrees({4, 4, 2, 2}, {1, 0, 4, 6, 2, 9, 3, 10, 11, 5, 7, 8});
}

// Two trivalent vertices joined by three edges.
inline TwoGraph theta_map() { return map_from_degrees({3, 3}, {3, 5, 4, 0, 2, 1}); }

// Quartic vertex with one self-loop on adjacent corners.
inline TwoGraph quartic_tadpole() { return map_from_degrees({4}, {1, 0, 2, 3}); }

inline TwoGraph corolla(int n) { return single_vertex(cycle_vertex_graph(n)); }

struct Named {
    std::string name;
    TwoGraph graph;
};

// The fixture corpus as built in code; tests/fixtures/<name>.json must match.
inline std::vector<Named> corpus() {
    std::vector<Named> out = {
        {"fish_equal", fish(1, 1)},
        {"fish_distinct", fish(1, 2)},
        {"fish_residue_distinct", residue(fish(1, 2))},
        {"fish_residue_equal", residue(fish(1, 1))},
        {"melon2pt", melon_tadpole()},
        {"melon_r3_closed", elementary_melon_r3()},
        {"gw_fish", gw_fish()},
        {"torus", torus()},
        {"pinched_torus_parent", pinched_torus_parent()},
        {"theta_map", theta_map()},
        {"quartic_tadpole", quartic_tadpole()},
    };
    for (int n = 1; n <= 6; ++n) out.push_back({"corolla" + std::to_string(n), corolla(n)});
    return out;
}

// ---------------------------------------------------------------- oracles

// |Aut| by trying every vertex and half-edge bijection and extending to strands by search.
inline std::uint64_t brute_force_automorphisms(const TwoGraph& g) {
    const int V = static_cast<int>(g.num_vertices()), H = static_cast<int>(g.num_half_edges()),
              S = static_cast<int>(g.num_strands());
    std::vector<int> hp(H);
    std::iota(hp.begin(), hp.end(), 0);
    std::uint64_t count = 0;
    std::vector<std::vector<int>> strands_of(H);
    for (int s = 0; s < S; ++s) strands_of[g.mu[s]].push_back(s);
    do {
        // half-edge map must be compatible with iota and induce a vertex bijection
        bool ok = true;
        for (int h = 0; h < H && ok; ++h) {
            if (hp[g.iota[h]] != g.iota[hp[h]]) ok = false;
            if (strands_of[h].size() != strands_of[hp[h]].size()) ok = false;
        }
        std::vector<int> vm(V, -1);
        for (int h = 0; h < H && ok; ++h) {
            const int a = g.nu[h], b = g.nu[hp[h]];
            if (vm[a] < 0) vm[a] = b;
            else if (vm[a] != b) ok = false;
        }
        if (!ok) continue;
        std::vector<int> vimg(V, 0);
        for (int v = 0; v < V; ++v)
            if (vm[v] >= 0) ++vimg[vm[v]];
        // isolated vertices (no half-edges) are interchangeable among themselves
        int isolated = 0;
        for (int v = 0; v < V; ++v)
            if (vm[v] < 0) ++isolated;
        for (int v = 0; v < V; ++v)
            if (vimg[v] > 1) ok = false;
        if (!ok) continue;
        std::uint64_t iso_factor = 1;
        for (int i = 2; i <= isolated; ++i) iso_factor *= static_cast<std::uint64_t>(i);
        // strand maps: per half-edge bijection, checked against sigma1 and sigma2
        std::vector<int> sm(S, -1);
        std::function<std::uint64_t(int)> rec = [&](int h) -> std::uint64_t {
            if (h == H) {
                for (int s = 0; s < S; ++s) {
                    if (sm[g.sigma1[s]] != g.sigma1[sm[s]]) return 0;
                    if (sm[g.sigma2[s]] != g.sigma2[sm[s]]) return 0;
                }
                return 1;
            }
            auto src = strands_of[h];
            auto dst = strands_of[hp[h]];
            std::sort(dst.begin(), dst.end());
            std::uint64_t c = 0;
            do {
                for (std::size_t i = 0; i < src.size(); ++i) sm[src[i]] = dst[i];
                bool consistent = true;
                for (int s : src)
                    for (const auto* rel : {&g.sigma1, &g.sigma2}) {
                        const int t = (*rel)[s];
                        if (sm[t] >= 0 && sm[t] != (*rel)[sm[s]]) consistent = false;
                    }
                if (consistent) c += rec(h + 1);
                for (int s : src) sm[s] = -1;
            } while (std::next_permutation(dst.begin(), dst.end()));
            return c;
        };
        count += rec(0) * iso_factor;
    } while (std::next_permutation(hp.begin(), hp.end()));
    return count;
}

// Internal faces by following sigma1/sigma2 chains from every strand.
inline std::size_t brute_force_internal_faces(const TwoGraph& g) {
    const int S = static_cast<int>(g.num_strands());
    std::vector<char> seen(S, 0);
    std::size_t n = 0;
    for (int s = 0; s < S; ++s) {
        if (seen[s]) continue;
        // walk both directions; a chain touching a sigma2 fixed point is external
        bool closed = true;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            if (g.sigma2[x] == x) closed = false;
            for (int y : {g.sigma1[x], g.sigma2[x]})
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        if (closed) ++n;
    }
    return n;
}

// Genus from V - E + F = 2 - 2g - K for a connected map.
inline long brute_force_genus(const TwoGraph& g) {
    const long V = static_cast<long>(g.num_vertices()), E = static_cast<long>(num_edges(g)),
               F = static_cast<long>(brute_force_internal_faces(g)),
               K = static_cast<long>(boundary_component_count(g));
    return (2 - K - (V - E + F)) / 2;
}

// Same graph with vertex, half-edge and strand indices shuffled (labels travel along).
inline TwoGraph shuffled(const TwoGraph& g, std::mt19937& rng) {
    auto perm = [&](std::size_t n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    };
    const auto pv = perm(g.num_vertices()), ph = perm(g.num_half_edges()), ps = perm(g.num_strands());
    TwoGraph out = g;
    for (std::size_t v = 0; v < pv.size(); ++v) out.vertex_labels[pv[v]] = g.vertex_labels[v];
    for (std::size_t h = 0; h < ph.size(); ++h) {
        out.half_edge_labels[ph[h]] = g.half_edge_labels[h];
        out.nu[ph[h]] = pv[g.nu[h]];
        out.iota[ph[h]] = ph[g.iota[h]];
    }
    for (std::size_t s = 0; s < ps.size(); ++s) {
        out.strand_labels[ps[s]] = g.strand_labels[s];
        out.mu[ps[s]] = ph[g.mu[s]];
        out.sigma1[ps[s]] = ps[g.sigma1[s]];
        out.sigma2[ps[s]] = ps[g.sigma2[s]];
        if (g.has_tags()) out.tags[ps[s]] = g.tags[s];
    }
    return out;
}

// Isomorphisms a -> b of 1-graphs by trying every half-edge bijection.
// Exhaustive half-edge bijections, pruned as soon as a partial map breaks adjacency.
inline std::uint64_t brute_force_one_isos(const OneGraph& a, const OneGraph& b) {
    const int H = static_cast<int>(a.num_half_edges()), V = static_cast<int>(a.num_vertices());
    if (H != static_cast<int>(b.num_half_edges()) || V != static_cast<int>(b.num_vertices())) return 0;
    std::vector<int> hp(H, -1), used(H, 0), vm(V, -1), vinv(V, -1), vcount(V, 0);
    std::uint64_t count = 0;
    std::function<void(int)> go = [&](int h) {
        if (h == H) {
            int isolated = 0;
            for (int v = 0; v < V; ++v) isolated += vm[v] < 0;
            std::uint64_t f = 1;
            for (int i = 2; i <= isolated; ++i) f *= static_cast<std::uint64_t>(i);
            count += f;
            return;
        }
        const int va = a.attach[h];
        for (int x = 0; x < H; ++x) {
            if (used[x]) continue;
            const int vb = b.attach[x];
            if (vm[va] >= 0 ? vm[va] != vb : vinv[vb] >= 0) continue;
            const int p = a.pairing[h];
            if (p == h ? b.pairing[x] != x : (p < h && hp[p] != b.pairing[x])) continue;
            if (p > h && (b.pairing[x] == x || used[b.pairing[x]])) continue;
            hp[h] = x;
            used[x] = 1;
            const bool fresh = vm[va] < 0;
            if (fresh) {
                vm[va] = vb;
                vinv[vb] = va;
            }
            go(h + 1);
            if (fresh) {
                vm[va] = -1;
                vinv[vb] = -1;
            }
            used[x] = 0;
            hp[h] = -1;
        }
    };
    go(0);
    return count;
}

inline std::uint64_t brute_force_one_aut(const OneGraph& g) { return brute_force_one_isos(g, g); }

inline std::uint64_t factorial(std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= i;
    return f;
}

inline TwoGraph fixture(const std::string& name) { return load_graph(dir() + "/" + name + ".json"); }

}  // namespace fixtures
