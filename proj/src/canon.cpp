#include "canon.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace strandhopf::detail {

namespace {

using Perm = std::vector<int>;

struct Orbits {
    std::vector<int> parent;
    explicit Orbits(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Search {
    const Structure& st;
    Encoder encode;
    const void* ctx;

    bool have_best = false;
    std::vector<std::uint64_t> best_inv;
    std::vector<int> best_code;
    std::vector<int> best_pos;
    std::vector<int> best_path;  // individualized elements on the way to the best leaf
    std::vector<Perm> gens;

    std::vector<std::uint64_t> path_inv;
    std::vector<int> path;

    // Coarsest equitable refinement; colours become ranks. Returns a quotient hash.
    std::uint64_t refine(std::vector<int>& col) const {
        const int n = st.n;
        std::vector<std::vector<int>> sig(n);
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        int k_prev = -1;
        for (;;) {
            for (int x = 0; x < n; ++x) {
                auto& s = sig[x];
                s.clear();
                s.push_back(col[x]);
                const std::size_t mark = s.size();
                for (auto [rel, t] : st.arcs[x]) s.push_back(rel * (n + 1) + col[t]);
                std::sort(s.begin() + static_cast<long>(mark), s.end());
            }
            std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
            int k = 0;
            std::uint64_t h = 1469598103934665603ull;
            auto mix = [&h](std::uint64_t v) { h = (h ^ v) * 1099511628211ull; };
            std::vector<int> ncol(n);
            for (int i = 0; i < n; ++i) {
                if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++k;
                if (i == 0 || sig[idx[i]] != sig[idx[i - 1]]) {
                    for (int v : sig[idx[i]]) mix(static_cast<std::uint64_t>(v + 7));
                    mix(0x9e37u);
                }
                ncol[idx[i]] = k;
            }
            const int kc = n ? k + 1 : 0;
            col = std::move(ncol);
            if (kc == k_prev || kc == n) {
                std::vector<int> size(kc, 0);
                for (int x = 0; x < n; ++x) ++size[col[x]];
                for (int s : size) mix(static_cast<std::uint64_t>(s));
                return h;
            }
            k_prev = kc;
        }
    }

    int target_cell(const std::vector<int>& col) const {
        const int n = st.n;
        std::vector<int> size(n, 0);
        for (int x = 0; x < n; ++x) ++size[col[x]];
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
        return target;
    }

    static std::vector<int> individualize(const std::vector<int>& col, int x) {
        std::vector<int> child(col.size());
        for (std::size_t y = 0; y < col.size(); ++y)
            child[y] = 2 * col[y] + ((col[y] == col[x] && static_cast<int>(y) != x) ? 1 : 0);
        return child;
    }

    Orbits stabilizer_orbits(const std::vector<int>& prefix) const {
        Orbits o(st.n);
        for (const auto& g : gens) {
            bool fixes = true;
            for (int p : prefix)
                if (g[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int x = 0; x < st.n; ++x) o.unite(x, g[x]);
        }
        return o;
    }

    // -1 better than best so far, 0 equal prefix, 1 worse
    int compare_prefix() const {
        if (!have_best) return -1;
        const std::size_t m = std::min(path_inv.size(), best_inv.size());
        for (std::size_t i = 0; i < m; ++i) {
            if (path_inv[i] < best_inv[i]) return -1;
            if (path_inv[i] > best_inv[i]) return 1;
        }
        return 0;
    }

    void add_automorphism(const std::vector<int>& pos) {
        std::vector<int> at(st.n);
        for (int x = 0; x < st.n; ++x) at[best_pos[x]] = x;
        Perm g(st.n);
        bool identity = true;
        for (int x = 0; x < st.n; ++x) {
            g[x] = at[pos[x]];
            identity = identity && g[x] == x;
        }
        if (!identity) gens.push_back(std::move(g));
    }

    void dfs(std::vector<int> col) {
        path_inv.push_back(refine(col));
        if (compare_prefix() > 0) {
            path_inv.pop_back();
            return;
        }
        const int target = target_cell(col);
        if (target < 0) {
            leaf(col);
            path_inv.pop_back();
            return;
        }
        std::vector<int> explored;
        for (int x = 0; x < st.n; ++x) {
            if (col[x] != target) continue;
            if (!explored.empty()) {
                auto o = stabilizer_orbits(path);
                bool seen = false;
                for (int e : explored)
                    if (o.find(e) == o.find(x)) {
                        seen = true;
                        break;
                    }
                if (seen) continue;
            }
            explored.push_back(x);
            path.push_back(x);
            dfs(individualize(col, x));
            path.pop_back();
        }
        path_inv.pop_back();
    }

    void leaf(const std::vector<int>& pos) {
        auto code = encode(ctx, pos);
        int cmp = compare_prefix();
        if (cmp == 0) {
            if (path_inv.size() != best_inv.size())
                cmp = path_inv.size() < best_inv.size() ? -1 : 1;
            else if (code < best_code)
                cmp = -1;
            else if (best_code < code)
                cmp = 1;
        }
        if (cmp < 0) {
            have_best = true;
            best_inv = path_inv;
            best_code = std::move(code);
            best_pos = pos;
            best_path = path;
        } else if (cmp == 0) {
            add_automorphism(pos);
        }
    }

    // Is there a leaf below `col` with the best invariants and code? Records the automorphism.
    bool find_equivalent(std::vector<int> col, std::size_t depth) {
        if (depth >= best_inv.size() || refine(col) != best_inv[depth]) return false;
        const int target = target_cell(col);
        if (target < 0) {
            if (depth + 1 != best_inv.size() || encode(ctx, col) != best_code) return false;
            add_automorphism(col);
            return true;
        }
        for (int x = 0; x < st.n; ++x)
            if (col[x] == target && find_equivalent(individualize(col, x), depth + 1)) return true;
        return false;
    }

    // |Aut| as the product of stabilizer orbit lengths along the best path.
    std::uint64_t count_automorphisms() {
        std::uint64_t total = 1;
        std::vector<int> col = st.colour;
        refine(col);
        for (std::size_t i = 0; i < best_path.size(); ++i) {
            const int xi = best_path[i];
            const std::vector<int> prefix(best_path.begin(), best_path.begin() + static_cast<long>(i));
            const int cell = col[xi];
            for (int y = 0; y < st.n; ++y) {
                if (col[y] != cell || y == xi) continue;
                auto o = stabilizer_orbits(prefix);
                if (o.find(y) == o.find(xi)) continue;
                find_equivalent(individualize(col, y), i + 1);
            }
            auto o = stabilizer_orbits(prefix);
            std::uint64_t orbit = 0;
            for (int y = 0; y < st.n; ++y)
                if (col[y] == cell && o.find(y) == o.find(xi)) ++orbit;
            total *= orbit;
            col = individualize(col, xi);
            refine(col);
        }
        return total;
    }
};

Perm compose(const Perm& a, const Perm& b) {  // (a o b)(x) = a(b(x))
    Perm c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
    return c;
}

}  // namespace

CanonOutcome canonicalize(const Structure& st, Encoder encode, const void* ctx, bool keep_all) {
    CanonOutcome out;
    if (st.n == 0) {
        out.optimal_count = 1;
        if (keep_all) out.optimal.push_back({});
        return out;
    }
    Search s{st, encode, ctx, false, {}, {}, {}, {}, {}, {}, {}};
    s.dfs(st.colour);
    out.best = s.best_pos;
    out.optimal_count = s.count_automorphisms();
    if (keep_all) {
        // enumerate the group from the generators found
        Perm id(st.n);
        std::iota(id.begin(), id.end(), 0);
        std::set<Perm> group{id};
        std::vector<Perm> frontier{id};
        while (!frontier.empty()) {
            std::vector<Perm> next;
            for (const auto& p : frontier)
                for (const auto& g : s.gens) {
                    auto q = compose(g, p);
                    if (group.insert(q).second) next.push_back(std::move(q));
                }
            frontier.swap(next);
        }
        for (const auto& g : group) {
            std::vector<int> pos(st.n);
            for (int x = 0; x < st.n; ++x) pos[x] = s.best_pos[g[x]];
            out.optimal.push_back(std::move(pos));
        }
    }
    return out;
}

}  // namespace strandhopf::detail
