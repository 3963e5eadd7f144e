#include <doctest.h>

#include "support.hpp"

using namespace fixtures;

TEST_CASE("corpus fixtures validate and match their builders") {
    for (const auto& [name, g] : corpus()) {
        CAPTURE(name);
        const auto r = validate(g);
        CHECK(r.valid);
        CHECK(r.presentations_agree);
        CHECK(canonical_form(fixture(name)) == canonical_form(g));
    }
}

TEST_CASE("axiom violations are reported") {
    const auto a = validate(fixture("invalid/sigma1_fixed_point"));
    CHECK_FALSE(a.valid);
    bool found = false;
    for (auto& v : a.violations) found = found || v.find("sigma1 fixed point") != std::string::npos;
    CHECK(found);

    const auto b = validate(fixture("invalid/edge_degree_mismatch"));
    CHECK_FALSE(b.valid);
    found = false;
    for (auto& v : b.violations) found = found || v.find("sigma2/iota incompatible") != std::string::npos;
    CHECK(found);
}

TEST_CASE("combinatorial map with a univalent vertex") {
    // sigma = (0)(1 2 3)(4 6 5), iota = (0 1)(2 4)(3 5), 6 external
    const auto g = from_combinatorial_map({0, 2, 3, 1, 6, 4, 5}, {1, 0, 4, 5, 2, 3, 6});
    CHECK(validate(g).valid);
    CHECK(g.num_vertices() == 3);
    CHECK(num_edges(g) == 3);
    CHECK(external_half_edges(g).size() == 1);
    const auto one = from_combinatorial_map({0}, {0});
    CHECK(one.num_vertices() == 1);
    CHECK(one.num_strands() == 2);
    CHECK(one.sigma1[0] == 1);
    CHECK(from_combinatorial_map({}, {}).num_vertices() == 0);
}

TEST_CASE("coloured graph construction") {
    const auto f = fish(1, 2);
    CHECK(f.num_vertices() == 2);
    CHECK(num_edges(f) == 2);
    CHECK(external_half_edges(f).size() == 4);
    for (int h = 0; h < static_cast<int>(f.num_half_edges()); ++h) CHECK(strands_at(f, h).size() == 4);

    // dipole of colours 0..3 with no colour-0 edge pair: one vertex, no edges
    std::vector<ColouredEdge> es;
    for (int c = 1; c <= 3; ++c) es.push_back({0, 1, c});
    const auto d = from_coloured_graph(2, 3, es);
    CHECK(d.num_vertices() == 1);
    CHECK(num_edges(d) == 0);

    // colour 1 used twice at node 0
    std::vector<ColouredEdge> bad = {{0, 1, 1}, {0, 1, 1}, {0, 1, 2}};
    CHECK_THROWS(from_coloured_graph(2, 2, bad));
}

TEST_CASE("vertex graphs") {
    const auto q = corolla(4);
    const auto vg = vertex_graph(q, 0);
    CHECK(vg.num_vertices() == 4);
    CHECK(vg.num_edges() == 4);
    CHECK(components(vg).second == 1);
    CHECK(vertex_graph(single_vertex(OneGraph{}), 0).num_vertices() == 0);

    const auto f = fish(1, 2);
    const auto ms = vertex_graphs_multiset(f);
    REQUIRE(ms.size() == 2);
    CHECK(are_isomorphic(ms[0], ms[1]));
    CHECK(ms[0].num_vertices() == 4);
    CHECK(ms[0].num_edges() == 8);  // four colours, two edges each
    // bipartite: every edge joins the two node classes of the pillow
    CHECK(vertex_graphs_multiset(TwoGraph{}).empty());

    // a multi-trace vertex and two separate vertices have the same union
    const auto two = residue(fish(1, 2));
    REQUIRE(two.num_vertices() == 1);
    CHECK(components(vertex_graph(two, 0)).second == 2);
    const auto parts = connected_components(vertex_graph(two, 0));
    const auto apart = disjoint_union({single_vertex(parts[0], "a"), single_vertex(parts[1], "b")});
    CHECK(canonical_form(vertex_graphs_union(two)) == canonical_form(vertex_graphs_union(apart)));
    CHECK(multiset_code(vertex_graphs_multiset(two)) != multiset_code(vertex_graphs_multiset(apart)));
}

TEST_CASE("face counts agree with chain following") {
    for (const auto& [name, g] : corpus()) {
        CAPTURE(name);
        CHECK(internal_face_count(g) == brute_force_internal_faces(g));
        const auto fs = faces(g);
        std::size_t covered = 0;
        for (auto& f : fs.internal) covered += f.sections.size();
        for (auto& f : fs.external) covered += f.sections.size();
        CHECK(covered == g.num_strands());
    }
    CHECK(internal_face_count(fish(1, 2)) == 2);
    CHECK(internal_face_count(fish(1, 1)) == 3);
    CHECK(faces(fish(1, 2)).external.size() == 8);
}

TEST_CASE("faces of a closed map are the cycles of sigma after iota") {
    // one quartic vertex, two self-loops
    const std::vector<int> sigma{1, 2, 3, 0}, iota{1, 0, 3, 2};
    const auto g = from_combinatorial_map(sigma, iota);
    std::vector<char> seen(4, 0);
    std::size_t cycles = 0;
    for (int h = 0; h < 4; ++h) {
        if (seen[h]) continue;
        ++cycles;
        for (int x = h; !seen[x]; x = sigma[iota[x]]) seen[x] = 1;
    }
    CHECK(internal_face_count(g) == cycles);
}

TEST_CASE("edgeless graphs have only external faces of length two") {
    const auto g = corolla(5);
    const auto fs = faces(g);
    CHECK(fs.internal.empty());
    CHECK(fs.external.size() == 5);
    for (auto& f : fs.external) CHECK(f.sections.size() == 2);
}

TEST_CASE("residue, skeleton and contraction") {
    const auto eq = residue(fish(1, 1));
    REQUIRE(eq.num_vertices() == 1);
    CHECK(components(vertex_graph(eq, 0)).second == 1);
    const auto ne = residue(fish(1, 2));
    REQUIRE(ne.num_vertices() == 1);
    CHECK(components(vertex_graph(ne, 0)).second == 2);
    for (auto& c : connected_components(vertex_graph(ne, 0))) CHECK(c.num_vertices() == 2);

    const auto sk = skeleton(fish(1, 2));
    CHECK(sk.num_vertices() == 2);
    CHECK(num_edges(sk) == 0);

    const auto c5 = corolla(5);
    CHECK(canonical_form(residue(c5)) == canonical_form(c5));
    CHECK(canonical_form(skeleton(c5)) == canonical_form(c5));

    for (const auto& [name, g] : corpus()) {
        CAPTURE(name);
        std::vector<bool> all(g.num_half_edges(), true);
        const auto r = contract_edges(g, all);
        CHECK(canonical_form(r) == canonical_form(residue(g)));
        CHECK(r.num_vertices() == static_cast<std::size_t>(vertex_components(g).second));
        CHECK(num_edges(r) == 0);
    }
}

TEST_CASE("boundary maps") {
    const auto f = fish(1, 2);
    const auto ff = disjoint_union({relabel_with_prefix(f, "a."), relabel_with_prefix(f, "b.")});
    const auto b = boundary(ff);
    CHECK(components(b).second == 4);
    for (auto& c : connected_components(b)) CHECK(c.num_vertices() == 2);
    const auto bt = boundary_components(ff);
    REQUIRE(bt.size() == 2);
    for (auto& c : bt) CHECK(components(c).second == 2);

    CHECK(boundary(elementary_melon_r3()).num_vertices() == 0);
    const auto q = cycle_vertex_graph(4);
    const auto bs = boundary_components(single_vertex(q));
    REQUIRE(bs.size() == 1);
    CHECK(are_isomorphic(bs[0], q));
}

TEST_CASE("cell complex") {
    const auto cx = to_complex(fish(1, 2));
    CHECK(cx.pure);
    CHECK(cx.two_dimensional);
    CHECK(cx.chain_property);
    for (auto [hi, lo] : cx.covers) CHECK(cx.cells[hi].dim == cx.cells[lo].dim + 1);

    const auto iso = disjoint_union({fish(1, 2), single_vertex(OneGraph{}, "lonely")});
    const auto cy = to_complex(iso);
    CHECK(cy.pure);
    CHECK_FALSE(cy.two_dimensional);

    const auto empty = to_complex(TwoGraph{});
    CHECK(empty.cells.empty());
    CHECK(empty.pure);
}

TEST_CASE("Euler characteristic") {
    const auto t = torus();
    CHECK(internal_face_count(t) == 2);
    CHECK(euler_characteristic(t) == 1 - 3 + 2);
    CHECK(euler_characteristic(corolla(3)) == 1);
    const auto f = fish(1, 1);
    const auto ff = disjoint_union({relabel_with_prefix(f, "a."), relabel_with_prefix(f, "b.")});
    CHECK(euler_characteristic(ff) == 2 * euler_characteristic(f));
}

TEST_CASE("labels order naturally") {
    CHECK(label_less("h2", "h10"));
    CHECK_FALSE(label_less("h10", "h2"));
    CHECK(label_less("a", "b"));
    CHECK_FALSE(label_less("x", "x"));
}

TEST_CASE("connectivity and bridges") {
    CHECK(is_connected(fish(1, 2)));
    CHECK(is_bridgeless(fish(1, 2)));
    CHECK_FALSE(is_connected(skeleton(fish(1, 2))));
    // theta map has three parallel edges: no bridge
    CHECK(is_bridgeless(theta_map()));
    // dumbbell: two tadpoles joined by one edge
    const auto db = map_from_degrees({3, 3}, {1, 0, 3, 2, 5, 4});
    CHECK(is_connected(db));
    CHECK_FALSE(is_bridgeless(db));
}
