#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dld/error.hpp"
#include "dld/generators.hpp"
#include "dld/shift.hpp"
#include "dld/verify.hpp"

#include "test_util.hpp"

#include <random>

using namespace dld;

TEST_CASE("orient") {
    CHECK(orient({0, 0}, {1, 0}, {0, 1}) > 0);
    CHECK(orient({0, 0}, {0, 1}, {1, 0}) < 0);
    CHECK(orient({0, 0}, {1, 1}, {2, 2}) == 0);
    // magnitudes past the fast path still give the right sign
    i64 big = i64(1) << 62;
    CHECK(orient({-big, -big}, {big, big - 1}, {big, big}) > 0);
    CHECK(orient({-big, -big}, {big, big}, {big, big - 1}) < 0);
    CHECK(orient({-big, -big}, {0, 0}, {big, big}) == 0);
}

TEST_CASE("point_segment_dist_sq") {
    // foot inside the segment: cross^2 / |ab|^2
    CHECK(point_segment_dist_sq({2, 0}, {0, 0}, {1, 1}) == rational(2));
    CHECK(point_segment_dist_sq({0, 1}, {0, 0}, {2, 0}) == rational(1));
    CHECK(point_segment_dist_sq({1, 1}, {0, 0}, {2, 2}) == rational(0));
    CHECK(point_segment_dist_sq({2, 1}, {0, 0}, {2, 2}) == rational(1, 2));
    // clamped to an endpoint
    CHECK(point_segment_dist_sq({-3, -4}, {0, 0}, {5, 0}) == rational(25));
    CHECK(point_segment_dist_sq({7, 1}, {0, 0}, {5, 0}) == rational(5));
    CHECK_THROWS_AS(point_segment_dist_sq({1, 1}, {2, 2}, {2, 2}), error);
}

TEST_CASE("check_disk_link on the K_3 drawing") {
    grid_drawing d;
    d.pos = {{0, 0}, {2, 0}, {1, 1}};
    auto rep = check_disk_link(gen_complete(3), d);
    CHECK(rep.is_disk_link);
    CHECK(rep.distinct_positions);
    // closest pair: the apex (1,1) above the base edge (0,0)-(2,0)
    CHECK(*rep.min_res_sq == rational(1));
    CHECK(rep.witness->v == 2);
    CHECK(rep.witness->e == edge(0, 1));
    CHECK(rep.grid_w == 3);
    CHECK(rep.grid_h == 2);
}

TEST_CASE("check_disk_link flags violations") {
    // vertex within the open disk criterion: distance 0 from a non-incident edge
    graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    grid_drawing d;
    d.pos = {{0, 0}, {4, 0}, {2, 0}, {2, 3}};
    auto rep = check_disk_link(g, d);
    CHECK(!rep.is_disk_link);
    CHECK(*rep.min_res_sq == rational(0));
    CHECK(rep.witness->v == 2);
    CHECK(rep.witness->e == edge(0, 1));

    // duplicate positions
    grid_drawing dup;
    dup.pos = {{0, 0}, {1, 1}, {0, 0}, {2, 2}};
    auto rep2 = check_disk_link(g, dup);
    CHECK(!rep2.is_disk_link);
    CHECK(!rep2.distinct_positions);
    CHECK(rep2.duplicate_positions == std::vector<std::pair<vertex_t, vertex_t>>{{0, 2}});

    // missing positions
    grid_drawing shrt;
    shrt.pos = {{0, 0}, {1, 1}};
    CHECK_THROWS_AS(check_disk_link(g, shrt), error);
}

TEST_CASE("incident edges are exempt") {
    // path 0-1-2 drawn collinear: each endpoint only clears the far edge
    graph g = test::path_graph(3);
    grid_drawing d;
    d.pos = {{0, 0}, {1, 0}, {2, 0}};
    auto rep = check_disk_link(g, d);
    CHECK(rep.is_disk_link);
    CHECK(*rep.min_res_sq == rational(1));
    CHECK(rep.witness->v == 0);
    CHECK(rep.witness->e == edge(1, 2));

    // a single edge has no non-incident pair at all
    graph e2 = test::path_graph(2);
    grid_drawing d2;
    d2.pos = {{0, 0}, {1, 0}};
    auto rep2 = check_disk_link(e2, d2);
    CHECK(rep2.is_disk_link);
    CHECK(!rep2.min_res_sq.has_value());
    CHECK(!rep2.witness.has_value());
}

TEST_CASE("empty and tiny drawings") {
    auto rep = check_disk_link(graph(0), grid_drawing{});
    CHECK(rep.is_disk_link);
    grid_drawing one;
    one.pos = {{5, 7}};
    auto rep1 = check_disk_link(graph(1), one);
    CHECK(rep1.is_disk_link);
    CHECK(rep1.grid_w == 1);
    CHECK(rep1.grid_h == 1);
}

static void expect_same_report(const verify_report& a, const verify_report& b) {
    CHECK(a.is_disk_link == b.is_disk_link);
    CHECK(a.distinct_positions == b.distinct_positions);
    CHECK(a.min_res_sq == b.min_res_sq);
    CHECK((a.witness.has_value() == b.witness.has_value()));
    if (a.witness && b.witness) {
        CHECK(a.witness->v == b.witness->v);
        CHECK(a.witness->e == b.witness->e);
    }
    CHECK(a.duplicate_positions == b.duplicate_positions);
    CHECK(a.grid_w == b.grid_w);
    CHECK(a.grid_h == b.grid_h);
}

TEST_CASE("bucketed equals brute force") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 4 + static_cast<int>(rng() % 30);
        int mmax = n * (n - 1) / 2;
        int m = 1 + static_cast<int>(rng() % std::min(mmax, 3 * n));
        graph g = test::random_graph(rng, n, m);
        i64 w = 7 + static_cast<i64>(rng() % 36); // w*w >= 49 >= max n
        grid_drawing d = test::random_drawing(rng, n, w, w);
        auto a = check_disk_link(g, d, check_mode::bucketed);
        auto b = check_disk_link(g, d, check_mode::brute_force);
        expect_same_report(a, b);
    }
}

TEST_CASE("bucketed equals brute force on adversarial shapes") {
    // two tight clusters far apart: ring walk must cross many empty cells
    graph g = gen_complete(6);
    grid_drawing d;
    d.pos = {{0, 0}, {1, 0}, {0, 1}, {100000, 100000}, {100001, 100000}, {100000, 100001}};
    expect_same_report(check_disk_link(g, d, check_mode::bucketed),
                       check_disk_link(g, d, check_mode::brute_force));

    // collinear spread with duplicates
    graph h(5);
    h.add_edge(0, 4);
    h.add_edge(1, 2);
    grid_drawing e;
    e.pos = {{0, 0}, {3, 0}, {6, 0}, {3, 0}, {9, 0}};
    expect_same_report(check_disk_link(h, e, check_mode::bucketed),
                       check_disk_link(h, e, check_mode::brute_force));

    // coordinates beyond the bucketable range fall back internally
    grid_drawing far;
    i64 off = i64(3) << 30;
    far.pos = {{off, off}, {off + 1, off}, {off, off + 1}, {-off, -off}, {-off + 1, -off},
               {-off, -off + 1}};
    expect_same_report(check_disk_link(g, far, check_mode::bucketed),
                       check_disk_link(g, far, check_mode::brute_force));
}

TEST_CASE("scaling multiplies min_res_sq by the square") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 5 + static_cast<int>(rng() % 10);
        graph g = test::random_graph(rng, n, n);
        grid_drawing d = test::random_drawing(rng, n, 12, 12);
        auto base = check_disk_link(g, d);
        if (!base.min_res_sq) continue;
        i64 s = 2 + static_cast<i64>(rng() % 5);
        grid_drawing scaled = d;
        scaled.scale(s, s);
        auto rep = check_disk_link(g, scaled);
        CHECK(*rep.min_res_sq == *base.min_res_sq * s * s);
    }
}

TEST_CASE("check_planar_drawing finds crossings, overlaps and touches") {
    // proper crossing
    graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    grid_drawing d;
    d.pos = {{0, 0}, {2, 2}, {0, 2}, {2, 0}};
    verify_report rep;
    check_planar_drawing(g, d, rep);
    CHECK(rep.crossings == std::vector<std::pair<edge, edge>>{{edge(0, 1), edge(2, 3)}});
    CHECK(!rep.planar_ok());

    // collinear overlap
    grid_drawing e;
    e.pos = {{0, 0}, {4, 0}, {2, 0}, {6, 0}};
    verify_report rep2;
    check_planar_drawing(g, e, rep2);
    CHECK(rep2.edge_overlaps.size() == 1);

    // vertex interior to a non-incident edge
    grid_drawing f;
    f.pos = {{0, 0}, {4, 0}, {2, 0}, {2, 3}};
    verify_report rep3;
    check_planar_drawing(g, f, rep3);
    CHECK(rep3.vertex_on_edge == std::vector<std::pair<vertex_t, edge>>{{2, edge(0, 1)}});

    // shared endpoints between adjacent edges are fine
    graph tri = gen_complete(3);
    grid_drawing t;
    t.pos = {{0, 0}, {3, 0}, {0, 3}};
    verify_report rep4;
    check_planar_drawing(tri, t, rep4);
    CHECK(rep4.planar_ok());
}

TEST_CASE("planar drawings from the pipeline pass check_planar_drawing") {
    for (int seed : {1, 2, 3}) {
        graph g = gen_maximal_planar(60, seed);
        auto res = draw_planar(g);
        verify_report rep = check_disk_link(g, res.drawing);
        check_planar_drawing(g, res.drawing, rep);
        CHECK(rep.is_disk_link);
        CHECK(rep.planar_ok());
    }
}

TEST_CASE("check_convex_position") {
    CHECK(check_convex_position({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK(check_convex_position({{0, 0}, {4, 1}, {5, 5}}));
    CHECK(!check_convex_position({{0, 0}, {1, 0}, {2, 0}}));            // collinear
    CHECK(!check_convex_position({{0, 0}, {2, 0}, {1, 0}, {1, 2}}));    // on hull edge
    CHECK(!check_convex_position({{0, 0}, {1, 0}, {1, 1}, {1, 1}}));    // duplicate
    CHECK(!check_convex_position({{0, 0}, {3, 0}, {0, 3}, {1, 1}}));    // interior point
    CHECK(!check_convex_position({{0, 0}, {1, 0}}));                    // too few
}

TEST_CASE("star_lower_bound") {
    CHECK(star_lower_bound(3) == doctest::Approx(4.0 / (16.0 * 3.14159265358979)).epsilon(1e-9));
    CHECK(star_lower_bound(33) == doctest::Approx(1024.0 / (16.0 * 3.14159265358979)).epsilon(1e-9));
    CHECK_THROWS_AS(star_lower_bound(2), error);
}

TEST_CASE("exact engine handles huge coordinates") {
    graph g(3);
    g.add_edge(0, 1);
    i64 big = i64(1) << 40;
    grid_drawing d;
    d.pos = {{-big, -big}, {big, big - 1}, {big - 1, big}};
    auto rep = check_disk_link(g, d, check_mode::brute_force);
    CHECK(rep.is_disk_link);
    CHECK(rep.min_res_sq.has_value());
    auto direct = point_segment_dist_sq(d.pos[2], d.pos[0], d.pos[1]);
    CHECK(*rep.min_res_sq == direct);
    expect_same_report(check_disk_link(g, d, check_mode::bucketed), rep);
}
