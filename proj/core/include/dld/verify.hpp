#pragma once

#include "dld/drawing.hpp"
#include "dld/graph.hpp"
#include "dld/rational.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace dld {

/* exact squared euclidean distance from p to closed segment [a,b];
   throws degenerate_segment when a == b */
rational point_segment_dist_sq(point p, point a, point b);

/* orientation sign of (a,b,c): >0 left turn, <0 right, 0 collinear */
int orient(point a, point b, point c);

struct resolution_witness {
    vertex_t v;
    edge e;
    friend bool operator==(const resolution_witness&, const resolution_witness&) = default;
};

struct verify_report {
    bool is_disk_link = false;
    bool distinct_positions = true;
    /* min over all (vertex, non-incident edge) pairs; empty when no such pair */
    std::optional<rational> min_res_sq;
    std::optional<resolution_witness> witness; // lexicographically smallest minimizer
    std::vector<std::pair<edge, edge>> crossings;      // properly crossing pairs
    std::vector<std::pair<edge, edge>> edge_overlaps;  // collinear overlapping pairs
    std::vector<std::pair<vertex_t, edge>> vertex_on_edge;
    std::vector<std::pair<vertex_t, vertex_t>> duplicate_positions;
    i64 grid_w = 0, grid_h = 0;

    bool planar_ok() const { return crossings.empty() && edge_overlaps.empty() && vertex_on_edge.empty(); }
};

enum class check_mode { bucketed, brute_force };

/* disk-link certificate: all positions distinct and every vertex at exact
   squared distance >= 1/4 from every non-incident edge (open unit-diameter
   disks). both modes produce identical reports; bucketed is near-linear
   expected time via uniform-grid buckets, brute force is O(n m). */
verify_report check_disk_link(const graph& g, const grid_drawing& d,
                              check_mode mode = check_mode::bucketed);

/* exact planarity of the straight-line drawing: fills crossings,
   edge_overlaps (collinear, or adjacent overlapping beyond the shared
   endpoint) and vertex-on-edge incidences of the given report */
void check_planar_drawing(const graph& g, const grid_drawing& d, verify_report& report);

/* all points are extreme points of their convex hull (strict: no point on a
   hull edge's interior, no duplicates); requires n >= 3 */
bool check_convex_position(const std::vector<point>& pts);

/* area lower bound (n-1)^2 / (16 pi) for any disk-link drawing of the star
   S_n; n >= 3 */
double star_lower_bound(int n);

struct star_search_options {
    /* true: return at the first achievable area. false: visit every box,
       center and completion within the extent (full enumeration) */
    bool stop_at_first_area = true;
    /* called for every placement decision the search makes; `accepted` is the
       oracle's own verdict on the partial drawing (center + leaves so far) */
    std::function<void(const grid_drawing& partial, bool accepted)> on_decision;
};

struct star_search_result {
    i64 area = 0;         // min W*H over valid drawings (lattice-point counts)
    grid_drawing witness; // center first, then leaves
    unsigned long long decisions = 0;
};

/* exhaustive minimum-grid-area search for stars: center + n-1 unordered
   leaves, boxes enumerated by increasing area, placements pruned by an exact
   integer disk-link check, symmetry-reduced (translation + the 8 box
   symmetries). n <= 8, max_extent <= 12 (side length of the search box).
   throws too_large / not_found */
star_search_result min_area_star_search(int n, int max_extent, const star_search_options& opts = {});

} // namespace dld
