#include "strandhopf/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "strandhopf/rewrite.hpp"

namespace strandhopf {

unsigned worker_threads() {
    if (const char* env = std::getenv("STRANDHOPF_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace {

// Renumber labels by index so appended pieces never collide.
void normalize_labels(TwoGraph& g) {
    for (std::size_t i = 0; i < g.num_vertices(); ++i) g.vertex_labels[i] = "v" + std::to_string(i + 1);
    for (std::size_t i = 0; i < g.num_half_edges(); ++i) g.half_edge_labels[i] = "h" + std::to_string(i + 1);
    for (std::size_t i = 0; i < g.num_strands(); ++i) g.strand_labels[i] = "s" + std::to_string(i + 1);
}

TwoGraph append_vertex(const TwoGraph& g, const OneGraph& vg, bool keep_tags) {
    TwoGraph piece = single_vertex(vg);
    if (!keep_tags) piece.tags.clear();
    TwoGraph base = g;
    if (!keep_tags) base.tags.clear();
    TwoGraph out = disjoint_union({base, piece});
    if (!keep_tags) out.tags.clear();
    normalize_labels(out);
    return out;
}

// Strand bijections from strands at h to strands at k allowed by the stranding rule.
std::vector<std::vector<int>> strand_matchings(const TwoGraph& g, int h, int k, Stranding rule) {
    const auto A = strands_at(g, h), B = strands_at(g, k);
    std::vector<std::vector<int>> out;
    if (A.size() != B.size()) return out;
    std::vector<int> perm(B.size());
    std::iota(perm.begin(), perm.end(), 0);
    const bool tagged = g.has_tags();
    do {
        bool ok = true;
        for (std::size_t i = 0; i < A.size() && ok; ++i) {
            const int a = A[i], b = B[perm[i]];
            if (rule == Stranding::oriented) ok = tagged && g.tags[a] + g.tags[b] == 1;
            if (rule == Stranding::coloured) ok = tagged && g.tags[a] == g.tags[b];
        }
        if (!ok) continue;
        std::vector<int> m(A.size());
        for (std::size_t i = 0; i < A.size(); ++i) m[i] = B[perm[i]];
        out.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

TwoGraph glue(const TwoGraph& g, int h, int k, const std::vector<int>& matched) {
    TwoGraph out = g;
    out.iota[h] = k;
    out.iota[k] = h;
    const auto A = strands_at(g, h);
    for (std::size_t i = 0; i < A.size(); ++i) {
        out.sigma2[A[i]] = matched[i];
        out.sigma2[matched[i]] = A[i];
    }
    return out;
}

struct Candidate {
    TwoGraph graph;
    std::uint64_t aut;
    std::pair<std::size_t, std::size_t> origin;  // (parent, move) for a schedule-independent pick
};

using Level = std::map<CanonicalCode, Candidate>;

void offer(Level& lvl, const CanonicalCode& code, Candidate c) {
    auto it = lvl.find(code);
    if (it == lvl.end())
        lvl.emplace(code, std::move(c));
    else if (c.origin < it->second.origin)
        it->second = std::move(c);
}

std::vector<EnumeratedGraph> enumerate_connected(const Theory& t, int max_edges, bool tagged) {
    const auto vs = t.vertex_set();
    bool keep_tags = t.stranding != Stranding::generic;
    for (const auto& w : vs) keep_tags = keep_tags && (w.graph.has_tags() || w.graph.num_half_edges() == 0);
    if (t.stranding != Stranding::generic && !keep_tags)
        throw std::invalid_argument("oriented/coloured stranding needs tagged vertex graphs");
    if (tagged && !keep_tags) throw std::invalid_argument("colour-preserving enumeration needs tagged vertex graphs");
    const std::size_t edge_strands = t.propagator.graph.num_half_edges() / 2;

    Level current;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        TwoGraph g = append_vertex(TwoGraph{}, vs[i].graph, keep_tags);
        auto c = canonical_two(g, tagged);
        offer(current, c.code, {std::move(g), c.aut, {0, i}});
    }
    std::vector<EnumeratedGraph> out;
    auto flush = [&](Level& lvl) {
        for (auto& [code, c] : lvl) out.push_back({std::move(c.graph), code, c.aut});
    };

    const unsigned threads = worker_threads();
    for (int e = 0; e < max_edges; ++e) {
        std::vector<const TwoGraph*> parents;
        for (auto& [code, c] : current) parents.push_back(&c.graph);
        const unsigned nthreads = static_cast<unsigned>(std::clamp<std::size_t>(parents.size() / 4, 1, threads));
        std::vector<Level> local(nthreads);
        auto work = [&](unsigned tid) {
            for (std::size_t p = tid; p < parents.size(); p += nthreads) {
                const TwoGraph& g = *parents[p];
                std::size_t move = 0;
                auto consider = [&](TwoGraph&& cand) {
                    auto c = canonical_two(cand, tagged);
                    offer(local[tid], c.code, {std::move(cand), c.aut, {p, move++}});
                };
                const auto free_h = external_half_edges(g);
                for (std::size_t i = 0; i < free_h.size(); ++i) {
                    const int h = free_h[i];
                    if (strands_at(g, h).size() != edge_strands) continue;
                    for (std::size_t j = i + 1; j < free_h.size(); ++j) {
                        const int k = free_h[j];
                        for (auto& m : strand_matchings(g, h, k, t.stranding)) consider(glue(g, h, k, m));
                    }
                    for (const auto& w : vs) {
                        TwoGraph bigger = append_vertex(g, w.graph, keep_tags);
                        const int base = static_cast<int>(g.num_half_edges());
                        for (std::size_t x = 0; x < w.graph.num_vertices(); ++x) {
                            const int k = base + static_cast<int>(x);
                            for (auto& m : strand_matchings(bigger, h, k, t.stranding))
                                consider(glue(bigger, h, k, m));
                        }
                    }
                }
            }
        };
        if (nthreads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned tid = 0; tid < nthreads; ++tid) pool.emplace_back(work, tid);
            for (auto& th : pool) th.join();
        }
        flush(current);
        Level next;
        for (auto& l : local)
            for (auto& [code, c] : l) offer(next, code, std::move(c));
        current.swap(next);
    }
    flush(current);
    for (auto& g : out) normalize_labels(g.graph);
    return out;
}

std::uint64_t factorial(std::uint64_t m) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= m; ++i) f *= i;
    return f;
}

}  // namespace

std::vector<EnumeratedGraph> enumerate(const Theory& t, const EnumerationOptions& opt) {
    if (opt.max_edges < 0) throw std::invalid_argument("max_edges must be non-negative");
    auto conn = enumerate_connected(t, opt.max_edges, opt.colour_preserving);
    std::vector<EnumeratedGraph> all;
    if (opt.connected) {
        all = std::move(conn);
    } else {
        // multisets of connected graphs, non-decreasing index order
        std::vector<std::size_t> E(conn.size());
        for (std::size_t i = 0; i < conn.size(); ++i) E[i] = num_edges(conn[i].graph);
        std::vector<std::size_t> pick;
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t used) {
            if (!pick.empty()) {
                std::vector<TwoGraph> parts;
                std::vector<std::string> codes;
                std::map<std::size_t, std::uint64_t> mult;
                std::uint64_t aut = 1;
                for (std::size_t i : pick) {
                    parts.push_back(relabel_with_prefix(conn[i].graph, "c" + std::to_string(parts.size() + 1) + "."));
                    codes.push_back(conn[i].code);
                    aut *= conn[i].aut;
                    ++mult[i];
                }
                for (auto& [i, m] : mult) aut *= factorial(m);
                std::sort(codes.begin(), codes.end());
                std::string code;
                for (auto& c : codes) code += (code.empty() ? "" : "|") + c;
                TwoGraph g = parts.size() == 1 ? conn[pick[0]].graph : disjoint_union(parts);
                all.push_back({std::move(g), code, aut});
            }
            if (static_cast<int>(pick.size()) == opt.max_components) return;
            for (std::size_t i = from; i < conn.size(); ++i) {
                if (used + E[i] > static_cast<std::size_t>(opt.max_edges)) continue;
                pick.push_back(i);
                rec(i, used + E[i]);
                pick.pop_back();
            }
        };
        rec(0, 0);
    }
    std::vector<EnumeratedGraph> out;
    std::optional<CanonicalCode> want;
    if (opt.boundary) want = canonical_form(*opt.boundary, opt.colour_preserving);
    for (auto& e : all) {
        if (want && canonical_form(boundary(e.graph), opt.colour_preserving) != *want) continue;
        if (opt.bridgeless_only && !is_bridgeless(e.graph)) continue;
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const EnumeratedGraph& a, const EnumeratedGraph& b) {
        const auto ea = num_edges(a.graph), eb = num_edges(b.graph);
        return ea != eb ? ea < eb : a.code < b.code;
    });
    return out;
}

std::vector<EnumeratedGraph> enumerate(const Theory& t, int max_edges, bool connected,
                                       const std::optional<OneGraph>& boundary) {
    EnumerationOptions opt;
    opt.max_edges = max_edges;
    opt.connected = connected;
    opt.boundary = boundary;
    return enumerate(t, opt);
}

TruncatedSeries weighted_series(const Theory& t, const EnumerationOptions& opt) {
    TruncatedSeries s;
    s.boundary = opt.boundary;
    s.connected = opt.connected;
    s.max_edges = opt.max_edges;
    for (auto& e : enumerate(t, opt)) s.terms[e.code] += Rational(1) / Rational(e.aut);
    return s;
}

ClosureStep extend_by_boundaries(const Theory& t, int max_edges) {
    ClosureStep step{t, 0};
    // stranded theories keep colour/orientation tags on the new types
    const bool tagged = t.stranding != Stranding::generic;
    std::set<CanonicalCode> known;
    for (const auto& w : t.vertex_set()) known.insert(canonical_form(w.graph, tagged));
    for (const auto& e : enumerate(t, max_edges, true)) {
        const auto b = boundary(e.graph);
        const auto code = canonical_form(b, tagged);
        if (!known.insert(code).second) continue;
        Rational w = 0;
        try {
            w = t.vertex_weight(b);
        } catch (const std::invalid_argument&) {
        }
        step.theory.vertices.push_back({tagged ? b : decode_one(code), w});
        ++step.added;
    }
    return step;
}

ClosureResult contraction_closure_bounded(const std::vector<OneGraph>& vertex_types, int max_boundary_vertices,
                                          int max_edges, int max_rounds) {
    ClosureResult res;
    if (vertex_types.empty()) {
        res.reached_fixpoint = true;
        return res;
    }
    Theory t;
    t.stranding = Stranding::generic;
    t.rule = WeightRule::zero_default;
    std::set<CanonicalCode> known;
    for (const auto& v : vertex_types)
        if (known.insert(canonical_form(v)).second) t.vertices.push_back({v, 0});
    // the propagator is taken from any two-vertex type, else the first type
    for (const auto& v : vertex_types)
        if (v.num_vertices() == 2) {
            t.propagator = {v, 0};
            break;
        }
    if (t.propagator.graph.num_vertices() == 0) t.propagator = {vertex_types.front(), 0};
    res.reached_fixpoint = false;
    for (res.rounds = 0; res.rounds < max_rounds; ++res.rounds) {
        std::size_t added = 0;
        for (const auto& e : enumerate(t, max_edges, true)) {
            const auto b = boundary(e.graph);
            if (static_cast<int>(b.num_vertices()) > max_boundary_vertices) continue;
            const auto code = canonical_form(b);
            if (!known.insert(code).second) continue;
            t.vertices.push_back({decode_one(code), 0});
            ++added;
        }
        if (added == 0) {
            res.reached_fixpoint = true;
            break;
        }
    }
    for (const auto& w : t.vertices) res.vertex_types.push_back(w.graph);
    return res;
}

// ------------------------------------------------------------ central identity

namespace {

std::string monomial_key(std::vector<CanonicalCode> codes) {
    std::sort(codes.begin(), codes.end());
    std::string s;
    for (auto& c : codes) s += (s.empty() ? "" : "*") + c;
    return s;
}

std::vector<CanonicalCode> component_codes(const TwoGraph& g, bool tagged) {
    std::vector<CanonicalCode> out;
    for (auto& c : connected_components(g)) out.push_back(canonical_form(c, tagged));
    return out;
}

}  // namespace

CentralIdentityReport check_central_identity(const Theory& t_in, int max_edges, int max_components, bool generic) {
    if (max_edges < 0 || max_edges > 4) throw std::invalid_argument("central identity check supports 0..4 edges");
    CentralIdentityReport rep;
    rep.max_edges = max_edges;
    rep.max_components = max_components;
    Theory base = t_in;
    if (generic) base.stranding = Stranding::generic;
    // stranded theories are checked in the colour-preserving category
    const bool tagged = base.stranding != Stranding::generic;
    const Theory W = extend_by_boundaries(base, max_edges).theory;
    rep.vertex_types = W.vertex_set().size();

    EnumerationOptions opt;
    opt.max_edges = max_edges;
    opt.connected = false;
    opt.max_components = max_components;
    opt.colour_preserving = tagged;
    const auto klass = enumerate(W, opt);
    std::set<CanonicalCode> in_class;
    for (auto& e : klass) in_class.insert(e.code);
    rep.right_factors = klass.size();

    std::map<std::pair<std::string, std::string>, std::pair<Rational, Rational>> table;

    // left-hand side: Delta X restricted to the class
    for (const auto& e : klass) {
        const Rational w = Rational(1) / Rational(e.aut);
        for (const auto& sub : subgraphs(e.graph)) {
            const auto right = canonical_form(contract(e.graph, sub), tagged);
            if (!in_class.count(right)) {
                ++rep.dropped_lhs_pairs;
                continue;
            }
            const auto left = monomial_key(component_codes(materialize(e.graph, sub), tagged));
            table[{left, right}].first += w;
        }
    }

    // right-hand side: insertion series per vertex of each right factor
    EnumerationOptions copt = opt;
    copt.connected = true;
    const auto connected = enumerate(W, copt);
    std::map<CanonicalCode, std::vector<const EnumeratedGraph*>> by_boundary;
    for (auto& e : connected) by_boundary[canonical_form(boundary(e.graph), tagged)].push_back(&e);

    for (const auto& rf : klass) {
        const int budget = max_edges - static_cast<int>(num_edges(rf.graph));
        std::vector<std::vector<const EnumeratedGraph*>> choices;
        Rational prefactor = Rational(1) / Rational(rf.aut);
        bool multi = false;
        for (std::size_t v = 0; v < rf.graph.num_vertices(); ++v) {
            const auto gv = vertex_graph(rf.graph, static_cast<int>(v));
            if (components(gv).second > 1) multi = true;
            const auto cv = canonical_one(gv, tagged);
            prefactor *= Rational(cv.aut);
            choices.push_back(by_boundary[cv.code]);
        }
        if (multi) ++rep.multi_trace_right_factors;
        std::vector<CanonicalCode> picked;
        std::function<void(std::size_t, int, Rational)> rec = [&](std::size_t v, int left_budget, Rational coeff) {
            if (v == choices.size()) {
                table[{monomial_key(picked), rf.code}].second += prefactor * coeff;
                return;
            }
            for (const auto* c : choices[v]) {
                const int E = static_cast<int>(num_edges(c->graph));
                if (E > left_budget) continue;
                picked.push_back(c->code);
                rec(v + 1, left_budget - E, coeff / Rational(c->aut));
                picked.pop_back();
            }
        };
        rec(0, budget, Rational(1));
    }

    rep.pass = true;
    for (auto& [key, val] : table) {
        IdentityPair p{key.first, key.second, val.first, val.second};
        if (!p.match()) {
            rep.pass = false;
            if (!rep.first_mismatch) rep.first_mismatch = p;
        }
        rep.pairs.push_back(std::move(p));
    }
    rep.pairs_compared = rep.pairs.size();
    return rep;
}

}  // namespace strandhopf
