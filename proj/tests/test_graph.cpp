#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dld/error.hpp"
#include "dld/generators.hpp"
#include "dld/graph.hpp"
#include "dld/plane_graph.hpp"

#include "test_util.hpp"

#include <algorithm>

using namespace dld;

TEST_CASE("graph basics") {
    graph g(4);
    g.add_edge(2, 0);
    g.add_edge(0, 1);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK(!g.has_edge(1, 2));
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(3) == 0);
    CHECK(g.edges() == std::vector<edge>{{0, 1}, {0, 2}});
    CHECK(!g.connected());
    g.add_edge(2, 3);
    g.add_edge(1, 3);
    CHECK(g.connected());
}

TEST_CASE("graph rejects bad edges") {
    graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), error);
    CHECK_THROWS_AS(g.add_edge(1, 0), error);
    CHECK_THROWS_AS(g.add_edge(0, 3), error);
    CHECK_THROWS_AS(g.add_edge(-1, 0), error);
    try {
        g.add_edge(1, 0);
    } catch (const error& e) {
        CHECK(e.code == errc::duplicate_edge);
    }
}

TEST_CASE("from_edges") {
    graph g = graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(2, 1));
}

TEST_CASE("generators") {
    graph s = gen_star(5);
    CHECK(s.num_edges() == 4);
    for (vertex_t v = 1; v < 5; ++v) CHECK(s.has_edge(0, v));

    graph c = gen_cycle(6);
    CHECK(c.num_edges() == 6);
    for (vertex_t v = 0; v < 6; ++v) CHECK(c.degree(v) == 2);
    CHECK(c.has_edge(5, 0));

    graph k = gen_complete(5);
    CHECK(k.num_edges() == 10);

    CHECK(gen_star(1).num_vertices() == 1);
    CHECK(gen_complete(1).num_edges() == 0);
    CHECK_THROWS_AS(gen_cycle(2), error);
    CHECK_THROWS_AS(gen_maximal_planar(2, 1), error);
}

TEST_CASE("gen_maximal_planar is a deterministic stacked triangulation") {
    graph a = gen_maximal_planar(10, 7);
    graph b = gen_maximal_planar(10, 7);
    CHECK(a.edges() == b.edges());
    CHECK(a.num_edges() == 24); // 3n - 6
    CHECK(a.connected());
    graph c = gen_maximal_planar(10, 8);
    CHECK(a.edges() != c.edges());
    for (int n : {3, 4, 20, 117}) {
        graph g = gen_maximal_planar(n, 42);
        CHECK(g.num_edges() == 3 * n - 6);
        plane_graph pg = embed(g); // must be planar
        pg.validate();
    }
}

TEST_CASE("embed produces a valid rotation system") {
    for (auto g : {gen_complete(4), test::octahedron(), gen_cycle(7), test::grid_graph(3, 4)}) {
        plane_graph pg = embed(g);
        pg.validate();
        CHECK(pg.num_faces() == 2 - g.num_vertices() + g.num_edges());
    }
}

TEST_CASE("embed rejects bad inputs") {
    CHECK_THROWS_AS(embed(gen_complete(5)), error);
    try {
        embed(gen_complete(5));
    } catch (const error& e) {
        CHECK(e.code == errc::not_planar);
    }
    graph k33(6);
    for (vertex_t u : {0, 1, 2})
        for (vertex_t v : {3, 4, 5}) k33.add_edge(u, v);
    CHECK_THROWS_AS(embed(k33), error);

    graph disc(4);
    disc.add_edge(0, 1);
    disc.add_edge(2, 3);
    CHECK_THROWS_AS(embed(disc), error);
    CHECK_THROWS_AS(embed(graph(2)), error);
}

TEST_CASE("plane_graph validate rejects corrupt rotations") {
    graph g = gen_complete(4);
    plane_graph pg = embed(g);
    auto rot = pg.rotations();
    std::reverse(rot[0].begin(), rot[0].end()); // mirror one vertex only
    bool both_fine = true;
    try {
        plane_graph bad(g, rot, pg.outer_face());
        bad.validate();
    } catch (const error& e) {
        both_fine = false;
        CHECK(e.code == errc::invalid_rotation);
    }
    // K_4: reversing one degree-3 rotation breaks the face count
    CHECK(!both_fine);

    rot = pg.rotations();
    rot[0].pop_back();
    CHECK_THROWS_AS(plane_graph(g, rot, pg.outer_face()).validate(), error);
}

TEST_CASE("faces walk closes and covers every directed edge") {
    plane_graph pg = embed(test::octahedron());
    auto fs = pg.faces();
    CHECK(fs.size() == 8);
    size_t total = 0;
    for (const auto& f : fs) {
        CHECK(f.size() == 3);
        total += f.size();
    }
    CHECK(total == 2 * pg.num_edges());
}

TEST_CASE("triangulate fills any planar graph to 3n-6") {
    for (auto g : {gen_cycle(8), test::path_graph(6), gen_star(7), test::grid_graph(3, 3),
                   test::wheel(6), gen_maximal_planar(30, 3)}) {
        plane_graph pg = embed(g);
        plane_graph tri = triangulate(pg);
        tri.validate();
        int n = tri.num_vertices();
        CHECK(tri.num_edges() == 3 * n - 6);
        CHECK(tri.outer_face().size() == 3);
        for (auto [u, v] : g.edges()) CHECK(tri.g().has_edge(u, v));
        for (const auto& f : tri.faces()) CHECK(f.size() == 3);
    }
}

TEST_CASE("triangulate keeps already-maximal graphs intact") {
    plane_graph pg = embed(gen_maximal_planar(40, 9));
    plane_graph tri = triangulate(pg);
    CHECK(tri.num_edges() == pg.num_edges());
    CHECK(tri.g().edges() == pg.g().edges());
}

TEST_CASE("embed_with_rotation honors the given order") {
    graph g = gen_complete(4);
    plane_graph base = embed(g);
    plane_graph again = embed_with_rotation(g, base.rotations());
    again.validate();
    CHECK(again.rotations() == base.rotations());

    auto rot = base.rotations();
    rot[1].pop_back();
    CHECK_THROWS_AS(embed_with_rotation(g, rot), error);
}
