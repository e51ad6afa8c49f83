#pragma once

#include "dld/drawing.hpp"
#include "dld/graph.hpp"

#include <vector>

namespace dld {

struct spans {
    i64 sx = 0, sy = 0;
    friend bool operator==(const spans&, const spans&) = default;
};

struct stretch_factors {
    i64 phi_x = 1, phi_y = 1;
    friend bool operator==(const stretch_factors&, const stretch_factors&) = default;
};

/* componentwise maxima of the per-edge coordinate spans sigma_x, sigma_y */
spans edge_spans(const graph& g, const grid_drawing& d);

/* smallest factors that turn any vertex-disjoint drawing into a disk-link
   drawing: phi_x >= 2 * max sigma_y, phi_y >= 2 * max sigma_x (and >= 1) */
stretch_factors min_stretch_factors(const graph& g, const grid_drawing& d);

/* (x, y) -> (x * phi_x, y * phi_y). requires distinct positions, no vertex on
   a closed non-incident edge segment, and factors at least the minimum above;
   result has min vertex-to-non-incident-edge distance >= 1.
   throws vertex_on_edge / factors_too_small */
grid_drawing stretch(const graph& g, const grid_drawing& d, stretch_factors f);

/* smallest prime > b (bertrand: <= 2b for b >= 1) */
i64 smallest_prime_gt(i64 b);

/* first n points of (i, i^2 mod p): among any p consecutive points no three
   are collinear. throws not_prime */
std::vector<point> erdos_points(i64 p, int n);

/* max |position difference| over edges; ord[i] = vertex at position i */
i64 bandwidth_of_ordering(const graph& g, const std::vector<vertex_t>& ord);

/* disk-link drawing for a graph of bandwidth b under ord: vertex at position
   i goes to the erdos point i for the smallest prime p > b, then min-factor
   stretching. width <= 2(p-1)(n-1)+1, height <= 2(p-1)^2+1 lattice points.
   throws invalid_ordering if ord is not a permutation or an edge exceeds b */
grid_drawing draw_bandwidth(const graph& g, const std::vector<vertex_t>& ord, i64 b);

/* reverse breadth-first heuristic ordering (start and queue ties by degree,
   then id) */
std::vector<vertex_t> rcm_ordering(const graph& g);

/* branch-and-bound exact minimum bandwidth ordering; n <= 12.
   throws too_large */
std::vector<vertex_t> exact_bandwidth_small(const graph& g);

/* K_n on a convex polygon: regular n-gon of radius 2n^2 rounded to the grid
   (ties away from zero), translated to nonnegative coordinates. certifies its
   own output: disk-link + strictly convex position + grid <= (4n^2+1)^2.
   throws certification_failed / degenerate_rounding / too_small */
grid_drawing draw_complete_convex(int n);

} // namespace dld
