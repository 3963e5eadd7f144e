// Acceptance run: one PASS/FAIL line per criterion. `acceptance [--criterion N]`.
#include <chrono>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>

#include "cli_runner.hpp"
#include "strandhopf/hopf.hpp"
#include "strandhopf/io.hpp"
#include "strandhopf/series.hpp"
#include "support.hpp"

using namespace fixtures;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (failures.size() < 5) failures.push_back(what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

std::string fx(const std::string& name) { return dir() + "/" + name + ".json"; }

// ------------------------------------------------------------------ 1

Outcome fish_suite() {
    Outcome o;
    for (int c2 : {1, 2}) {
        const auto g = fish(1, c2);
        const auto subs = subgraphs(g);
        o.expect(subs.size() == 4, "subgraph count");
        if (subs.size() != 4) continue;
        std::vector<TwoGraph> q;
        for (auto& s : subs) q.push_back(contract(g, s));
        const std::string tag = c2 == 1 ? "equal colours: " : "distinct colours: ";
        o.expect(are_isomorphic(q[0], g), tag + "G/H0 is G");
        o.expect(are_isomorphic(q[1], q[2]), tag + "G/H1 and G/H2 isomorphic");
        for (int i : {1, 2})
            o.expect(q[i].num_vertices() == 1 && num_edges(q[i]) == 1 && are_isomorphic(residue(q[i]), q[3]),
                     tag + "G/H1 one vertex with a self-loop");
        const auto vg = vertex_graph(q[3], 0);
        if (c2 == 1)
            o.expect(q[3].num_vertices() == 1 && components(vg).second == 1 &&
                         are_isomorphic(vg, quartic_melonic_vertex_graph(4, 1)),
                     tag + "G/G single-trace pillow");
        else
            o.expect(q[3].num_vertices() == 1 && components(vg).second == 2 &&
                         are_isomorphic(vg, disjoint_union({melon_vertex_graph(4), melon_vertex_graph(4)})),
                     tag + "G/G multi-trace melon pair");
    }
    o.expect(!are_isomorphic(contract(fish(1, 1), Subgraph{1}), contract(fish(1, 2), Subgraph{1})),
             "one-edge contractions differ between the colour cases");
    o.expect(!are_isomorphic(residue(fish(1, 1)), residue(fish(1, 2))), "residues differ between the colour cases");

    const auto f = fish(1, 2);
    const auto d = coproduct(AlgebraElement::of(f));
    const auto es = edges(f);
    std::vector<bool> one(f.num_half_edges(), false);
    one[es[0].first] = one[es[0].second] = true;
    const auto key_sk = std::make_pair(monomial_of(skeleton(f)), monomial_of(f));
    const auto key_mid = std::make_pair(monomial_of(restrict_edges(f, one)), monomial_of(contract_edges(f, one)));
    const auto key_full = std::make_pair(monomial_of(f), monomial_of(residue(f)));
    o.expect(d.terms.size() == 3, "three coproduct terms");
    o.expect(d.terms.count(key_sk) && d.terms.at(key_sk) == 1, "skeleton term");
    o.expect(d.terms.count(key_mid) && d.terms.at(key_mid) == 2, "middle term multiplicity 2");
    o.expect(d.terms.count(key_full) && d.terms.at(key_full) == 1, "full term");
    return o;
}

// ------------------------------------------------------------------ 2

Outcome hopf_axioms() {
    Outcome o;
    std::size_t n = 0, pairs = 0;
    for (const auto& name : {"gw4", "bgr"}) {
        const auto es = enumerate(preset_theory(name), 3, true);
        std::vector<AlgebraElement> xs;
        for (const auto& e : es) {
            const auto x = AlgebraElement::of(e.graph);
            const auto d = coproduct(x);
            o.expect(coproduct_then_left(d) == coproduct_then_right(d), std::string(name) + " coassociativity " + e.code);
            o.expect(counit_left(d) == x && counit_right(d) == x, std::string(name) + " counit " + e.code);
            o.expect(antipode_left_identity(x) == unit(counit(x)), std::string(name) + " left antipode " + e.code);
            o.expect(antipode_right_identity(x) == unit(counit(x)), std::string(name) + " right antipode " + e.code);
            xs.push_back(x);
            ++n;
        }
        // bialgebra compatibility on products of pairs with at most three edges in total
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = i; j < es.size(); ++j) {
                if (num_edges(es[i].graph) + num_edges(es[j].graph) > 3) continue;
                if ((i + j) % 7 != 0 && num_edges(es[i].graph) + num_edges(es[j].graph) > 1) continue;
                o.expect(coproduct(xs[i] * xs[j]) == tensor_product(coproduct(xs[i]), coproduct(xs[j])),
                         std::string(name) + " bialgebra");
                ++pairs;
            }
    }
    o.note(std::to_string(n) + " graphs, " + std::to_string(pairs) + " products");
    return o;
}

// ------------------------------------------------------------------ 3

Outcome central_identity() {
    Outcome o;
    for (const auto& name : {"phi4-matrix", "tensor-r3-quartic"}) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = check_central_identity(preset_theory(name), 2);
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.expect(r.pass, std::string(name) + " identity");
        o.expect(r.multi_trace_right_factors > 0, std::string(name) + " multi-trace right factor");
        o.expect(s < 600, std::string(name) + " runtime");
        o.note(std::string(name) + ": " + std::to_string(r.pairs_compared) + " pairs, " +
               std::to_string(r.multi_trace_right_factors) + " multi-trace right factors, " +
               std::to_string(static_cast<int>(s)) + " s");
    }
    return o;
}

// ------------------------------------------------------------------ 4

std::uint64_t insertion_formula(const TwoGraph& host) {
    std::map<CanonicalCode, std::uint64_t> mult;
    std::uint64_t out = 1;
    for (std::size_t v = 0; v < host.num_vertices(); ++v) {
        const auto gv = vertex_graph(host, static_cast<int>(v));
        ++mult[canonical_form(gv)];
        out *= brute_force_one_aut(gv);
    }
    for (auto& [c, m] : mult) out *= factorial(m);
    return out;
}

Outcome insertion_counting() {
    Outcome o;
    std::size_t pairs = 0, dual = 0;
    std::vector<TwoGraph> small;
    for (const auto& [name, g] : corpus())
        if (num_edges(g) <= 3) small.push_back(g);
    for (const auto& g : small) {
        const auto subs = subgraphs(g);
        std::vector<CanonicalCode> hs, qs;
        for (auto& s : subs) {
            hs.push_back(canonical_form(materialize(g, s)));
            qs.push_back(canonical_form(contract(g, s)));
        }
        std::set<std::pair<CanonicalCode, CanonicalCode>> seen;
        for (std::size_t k = 0; k < subs.size(); ++k) {
            const auto H = materialize(g, subs[k]);
            const auto Q = contract(g, subs[k]);
            const auto ins = insertions(H, Q);
            if (Q.num_half_edges() <= 8) {
                o.expect(ins.size() == insertion_formula(Q), "insertion count formula");
                ++pairs;
            }
            if (!seen.insert({hs[k], qs[k]}).second) continue;
            std::uint64_t lhs = 0, rhs = 0;
            for (std::size_t j = 0; j < subs.size(); ++j) lhs += hs[j] == hs[k] && qs[j] == qs[k];
            const auto codeG = canonical_form(g);
            for (auto& i : ins) rhs += canonical_form(insert(Q, i, H)) == codeG;
            o.expect(lhs * automorphism_count(H) * automorphism_count(Q) == rhs * automorphism_count(g), "duality");
            ++dual;
        }
    }
    o.expect(pairs >= 10, "at least 10 insertion fixtures");
    o.note(std::to_string(pairs) + " insertion pairs, " + std::to_string(dual) + " duality classes");
    return o;
}

// ------------------------------------------------------------------ 5

Outcome automorphism_oracle() {
    Outcome o;
    std::size_t n = 0;
    for (const auto& [name, g] : corpus()) {
        if (g.num_half_edges() > 6) continue;
        o.expect(automorphism_count(g) == brute_force_automorphisms(g), name);
        ++n;
    }
    o.note(std::to_string(n) + " fixtures");
    return o;
}

// ------------------------------------------------------------------ 6

Outcome matrix_power_counting() {
    Outcome o;
    const auto gw = preset_theory("gw4");
    const auto es = enumerate(gw, 3, true);
    for (const auto& e : es) {
        const Rational faces = Rational(gw.dimension) * Rational(static_cast<long>(brute_force_internal_faces(e.graph)));
        Rational w = faces;
        for (std::size_t v = 0; v < e.graph.num_vertices(); ++v) w += gw.vertex_weight(vertex_graph(e.graph, static_cast<int>(v)));
        w -= Rational(static_cast<long>(num_edges(e.graph))) * gw.propagator.weight;
        o.expect(w == superficial_degree(gw, e.graph), "face count " + e.code);
        o.expect(matrix_degree_closed_form(gw, e.graph) == w, "closed form " + e.code);
    }
    std::set<CanonicalCode> div;
    for (const auto& g : divergent_set(gw, 3)) div.insert(canonical_form(g));
    for (const auto& e : es) {
        const auto& g = e.graph;
        const auto Vb = boundary_vertex_count(g);
        const bool expected = num_edges(g) > 0 && is_bridgeless(g) && brute_force_genus(g) == 0 &&
                              boundary_component_count(g) == 1 && (Vb == 2 || Vb == 4);
        o.expect(div.count(e.code) == (expected ? 1u : 0u), "divergent set membership " + e.code);
    }
    o.note(std::to_string(es.size()) + " maps, " + std::to_string(div.size()) + " divergent");
    return o;
}

// ------------------------------------------------------------------ 7

Outcome tensorial_power_counting() {
    Outcome o;
    const auto bgr = preset_theory("bgr");
    const auto es = enumerate(bgr, 2, true);
    std::size_t single = 0, display_mismatch = 0, contractions = 0;
    for (const auto& e : es) {
        const auto& g = e.graph;
        o.expect(gurau_degree_open(g, 4) >= gurau_degree_boundary(g, 4), "Gurau bound " + e.code);
        if (!is_single_trace(g)) continue;
        ++single;
        const auto generic = tensorial_degree_reduced(bgr, g);
        if (bgr_degree_display(g) != generic) ++display_mismatch;
        for (auto [h, k] : edges(g)) {
            if (g.nu[h] == g.nu[k]) continue;
            std::vector<bool> one(g.num_half_edges(), false);
            one[h] = one[k] = true;
            const auto q = contract_edges(g, one);
            if (!is_single_trace(q) || !strand_colours(q, 4)) continue;
            o.expect(gurau_degree_open(q, 4) == gurau_degree_open(g, 4), "Gurau contraction invariance " + e.code);
            ++contractions;
        }
    }
    o.expect(display_mismatch == 0, "displayed BGR formula equals the generic closed form on " +
                                        std::to_string(display_mismatch) + " of " + std::to_string(single) +
                                        " single-trace graphs: mismatch (constant 6 vs d_r = 3)");

    const auto ds = divergent_set(bgr, 2);
    std::set<CanonicalCode> codes;
    for (auto& g : ds) codes.insert(canonical_form(g));
    o.expect(!ds.empty(), "divergent set nonempty");
    for (auto& g : ds)
        for (auto& s : subgraphs(g)) {
            const auto sub = materialize(g, s);
            bool members = true;
            for (auto& c : connected_components(sub))
                if (num_edges(c) > 0) members = members && codes.count(canonical_form(c));
            if (!members) continue;
            const auto q = contract(g, s);
            if (num_edges(q) > 0) o.expect(codes.count(canonical_form(q)) == 1, "divergent set closure");
        }
    o.note(std::to_string(es.size()) + " graphs, " + std::to_string(single) + " single-trace, " +
           std::to_string(contractions) + " contractions, " + std::to_string(ds.size()) + " divergent");
    return o;
}

// ------------------------------------------------------------------ 8

Outcome euler_characteristic_check() {
    Outcome o;
    const auto g = pinched_torus_parent();
    bool found = false;
    for (auto& s : subgraphs(g)) {
        const auto sub = materialize(g, s);
        // every contracted edge lies in one cylinder (genus 0, two boundary components)
        int with_edges = 0;
        bool cylinder = false;
        for (auto& c : connected_components(sub)) {
            if (num_edges(c) == 0) continue;
            ++with_edges;
            cylinder = brute_force_genus(c) == 0 && boundary_component_count(c) == 2;
        }
        if (with_edges != 1 || !cylinder) continue;
        const auto q = contract(g, s);
        bool multi = false;
        for (std::size_t v = 0; v < q.num_vertices(); ++v) multi = multi || components(vertex_graph(q, static_cast<int>(v))).second == 2;
        if (!multi) continue;
        const long chi = static_cast<long>(q.num_vertices()) - static_cast<long>(num_edges(q)) +
                         static_cast<long>(brute_force_internal_faces(q));
        o.expect(chi == 1 && euler_characteristic(q) == chi, "chi = 1 after contracting a cylinder");
        found = found || (q.num_vertices() == 3 && num_edges(q) == 4 && brute_force_internal_faces(q) == 2);
    }
    o.expect(found, "cylinder contraction with V=3, E=4, F=2 found");
    o.expect(genus(g) == 1, "parent has genus one");
    o.expect(genus(torus()) == 1, "torus genus");
    int jacket_computed = 0, single_jacket = 0;
    for (const auto& m : {gw_fish(), torus(), pinched_torus_parent(), theta_map(), quartic_tadpole(), corolla(3), corolla(4)}) {
        o.expect(gurau_degree_open(m, 2) == Rational(brute_force_genus(m)), "rank-2 Gurau degree equals genus");
        ++(find_colouring(m, 2) ? jacket_computed : single_jacket);
    }
    o.note(std::to_string(jacket_computed) + " maps through coloured jackets, " + std::to_string(single_jacket) +
           " odd-degree maps through their single jacket");
    return o;
}

// ------------------------------------------------------------------ 9

Laurent random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> terms(0, 4), expo(-4, 3), num(-9, 9), den(1, 5);
    Laurent x;
    const int n = terms(rng);
    for (int i = 0; i < n; ++i) x += Laurent::monomial(expo(rng), Rational(num(rng), den(rng)));
    return x;
}

Outcome counterterms() {
    Outcome o;
    std::size_t divergent = 0;
    for (const auto& name : {"gw4", "bgr", "tensor-r3-quartic"}) {
        const auto t = preset_theory(name);
        auto [phi, R] = toy_ms_character(t);
        Renormalizer ms(phi, R), none(phi, zero_operator());
        std::vector<TwoGraph> gs;
        for (const auto& [fname, g] : corpus()) gs.push_back(g);
        for (const auto& e : enumerate(t, 2, true)) gs.push_back(e.graph);
        for (const auto& g : gs) {
            bool applies = true;
            try {
                applies = is_superficially_divergent(t, g);
            } catch (const std::exception&) {
                applies = false;  // fixture outside this theory's weight table
            }
            if (!applies) continue;
            ++divergent;
            const auto m = monomial_of(g);
            o.expect(!ms.renormalized(m).has_pole(), std::string(name) + " pole left " + canonical_form(g));
            o.expect(none.renormalized(m) == phi.eval(m), std::string(name) + " R=0");
            o.expect(none.counterterm(m) == Laurent{}, std::string(name) + " R=0 counterterm");
        }
    }
    std::mt19937 rng(1);
    const auto R = pole_part_operator();
    for (int i = 0; i < 1000; ++i) {
        const auto a = random_laurent(rng), b = random_laurent(rng);
        o.expect(R.apply(a) * R.apply(b) == R.apply(R.apply(a) * b + a * R.apply(b)) - R.apply(a * b), "Rota-Baxter");
    }
    o.note(std::to_string(divergent) + " divergent graphs, 1000 Laurent pairs");
    return o;
}

// ------------------------------------------------------------------ 10

Outcome io_check() {
    Outcome o;
    std::size_t n = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir())) {
        if (entry.path().extension() != ".json") continue;
        const auto text = read_file(entry.path().string());
        o.expect(serialize_graph(parse_graph(text)) == text, "round trip " + entry.path().filename().string());
        ++n;
    }
    o.expect(n == corpus().size(), "fixture count");

    struct Case {
        std::string args;
        int code;
    };
    const std::vector<Case> cases = {
        {"validate " + fx("fish_distinct"), 0},
        {"validate " + fx("invalid/sigma1_fixed_point"), 1},
        {"validate " + fx("invalid/edge_degree_mismatch"), 1},
        {"validate " + fx("invalid/unknown_reference"), 3},
        {"validate " + fx("invalid/truncated"), 3},
        {"", 2},
        {"enumerate --theory gw4", 2},
        {"info " + fx("torus"), 0},
        {"contract " + fx("fish_distinct") + " --edges e1,e2", 0},
        {"contract " + fx("fish_distinct") + " --edges e9", 2},
        {"coproduct " + fx("fish_distinct"), 0},
        {"antipode " + fx("fish_distinct"), 0},
        {"classify " + fx("melon2pt") + " --theory bgr", 0},
        {"classify " + fx("melon2pt") + " --theory nowhere", 3},
        {"enumerate --theory gw4 --max-edges 1 --connected", 0},
        {"central-check --theory gw4 --max-edges 1", 0},
        {"export-dot " + fx("torus") + " --mode vertexgraph", 0},
    };
    for (const auto& c : cases) {
        const auto r = run(c.args);
        o.expect(r.code == c.code, "exit code of '" + c.args + "'");
        if (r.code >= 1 && c.args.rfind("validate", 0) != 0) {
            try {
                const auto j = Json::parse(r.err);
                o.expect(j["error"]["kind"].is_string() && j["error"]["message"].is_string(), "error schema");
            } catch (const std::exception&) {
                o.expect(false, "stderr is an error document for '" + c.args + "'");
            }
        }
    }
    // output schemas
    try {
        const auto v = Json::parse(run("validate " + fx("fish_distinct")).out);
        o.expect(v["valid"].is_boolean() && v["violations"].is_array(), "validation schema");
        const auto i = Json::parse(run("info " + fx("torus")).out);
        for (const char* k : {"vertices", "edges", "internal_faces", "external_faces", "euler_characteristic", "code", "genus"})
            o.expect(i.contains(k), std::string("info field ") + k);
        const auto c = Json::parse(run("classify " + fx("melon2pt") + " --theory bgr").out);
        o.expect(c["divergent"].is_boolean() && c["components"].is_array(), "classification schema");
        const auto d = Json::parse(run("coproduct " + fx("fish_distinct")).out);
        for (auto& t : d) o.expect(t.contains("left") && t.contains("right") && t.contains("coefficient"), "coproduct schema");
        const auto g = parse_graph(run("contract " + fx("fish_distinct") + " --edges e1,e2").out);
        o.expect(validate(g).valid, "contract emits a valid GraphDocument");
        const auto ch = Json::parse(run("central-check --theory gw4 --max-edges 1").out);
        o.expect(ch["result"] == "PASS" && ch.contains("pairs_compared") && ch.contains("first_mismatch"), "central schema");
    } catch (const std::exception& e) {
        o.expect(false, std::string("schema: ") + e.what());
    }
    o.note(std::to_string(n) + " fixtures, " + std::to_string(cases.size()) + " CLI invocations");
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<Outcome()> fn;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i)
        if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) only = std::atoi(argv[++i]);

    const std::vector<Criterion> all = {
        {1, "fish subgraphs, contractions and coproduct", 1, fish_suite},
        {2, "Hopf axioms on <=3-edge GW and BGR graphs", 300, hopf_axioms},
        {3, "central identity at 2 edges, matrix and rank-3 coloured", 1200, central_identity},
        {4, "insertion count formula and contraction-insertion duality", 0, insertion_counting},
        {5, "automorphism count vs brute force", 0, automorphism_oracle},
        {6, "matrix power counting and GW divergent set", 0, matrix_power_counting},
        {7, "tensorial power counting (BGR)", 0, tensorial_power_counting},
        {8, "Euler characteristic, genus, rank-2 Gurau degree", 0, euler_characteristic_check},
        {9, "counterterms, R = 0, Rota-Baxter", 60, counterterms},
        {10, "I/O round trip, CLI exit codes and schemas", 0, io_check},
    };
    int failed = 0;
    for (const auto& c : all) {
        if (only && c.id != only) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0) o.expect(s < c.limit_s, "runtime limit " + std::to_string(static_cast<int>(c.limit_s)) + " s");
        std::cout << "criterion " << c.id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.title;
        char buf[32];
        std::snprintf(buf, sizeof buf, " [%.2f s]", s);
        std::cout << buf;
        for (auto& n : o.notes) std::cout << "; " << n;
        for (auto& f : o.failures) std::cout << "\n    failed: " << f;
        std::cout << std::endl;
        failed += !o.ok;
    }
    return failed == 0 ? 0 : 1;
}
