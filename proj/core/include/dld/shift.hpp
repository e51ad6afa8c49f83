#pragma once

#include "dld/canonical.hpp"
#include "dld/drawing.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace dld {

/* shift sets as a forest: vertices covered during an insertion hang below
   their coverer with a fixed horizontal offset (the red-edge forest), so the
   three shifting phases cost O(1) amortized per insertion */
struct offset_forest {
    std::vector<vertex_t> parent; // -1 for roots (contour vertices)
    std::vector<i64> delta;       // x offset relative to parent

    explicit offset_forest(int n = 0) : parent(n, -1), delta(n, 0) {}
};

/* contour w_1..w_p of the partial drawing: doubly linked, dx[w] = horizontal
   distance to the contour predecessor, y absolute */
struct contour_state {
    std::vector<vertex_t> next, prev;
    std::vector<i64> dx;
    std::vector<i64> y;
    vertex_t head = -1; // v1
    vertex_t tail = -1; // v2
};

struct insertion_event {
    vertex_t v;                    // inserted vertex
    vertex_t wl, wr;               // leftmost / rightmost contour neighbor
    std::vector<vertex_t> covered; // w_{l+1}..w_{r-1}, left to right
    i64 dr;                        // second-phase shift amount
};

/* incremental modified shift method over a canonical order.
   v1,v2,v3 start at (0,0),(2,0),(1,1); each insert_vertex applies the three
   shifting phases in relative coordinates and places v_k on the +/-1 lines
   through w_l and w_r. */
class shift_state {
  public:
    shift_state(const plane_graph& pg, const canon_order& co);

    /* insert the next vertex in canonical order; returns the event */
    insertion_event insert_vertex();
    /* run every remaining insertion without materializing events */
    void insert_all();
    bool done() const { return next_k_ > n_; }

    /* one root-to-leaf accumulation pass over the forest */
    grid_drawing resolve() const;

    const contour_state& contour() const { return c_; }
    const offset_forest& forest() const { return forest_; }

    /* exact invariant checks after every insertion (tests) */
    void set_paranoid(bool on) { paranoid_ = on; }

  private:
    void step(insertion_event* out);
    void check_contour() const;

    const plane_graph* pg_;
    const canon_order* co_;
    int n_;
    int next_k_; // 1-based canonical index of next vertex to insert
    contour_state c_;
    offset_forest forest_;
    std::vector<char> placed_, on_contour_, mark_;
    /* adjacency flattened in insertion order so the hot loop reads it
       sequentially */
    std::vector<int> adj_off_;
    std::vector<vertex_t> adj_flat_;
    std::vector<vertex_t> nbrs_, covered_; // insertion scratch, reused across calls
    std::vector<i64> covered_x_;           // insertion scratch, reused across calls
    bool paranoid_ = false;
};

/* x positions from parent offsets; roots pinned by `root_x`.
   throws cyclic_forest if the parent structure is not a forest */
std::vector<i64> resolve_offsets(const offset_forest& f,
                                 const std::vector<std::pair<vertex_t, i64>>& root_x);

struct planar_drawing_result {
    grid_drawing drawing;
    canon_order order;
    plane_graph augmented;
};

/* disk-link drawing of any connected planar graph (n >= 3):
   embed -> triangulate -> canonical order -> modified shift method.
   width <= 3n-7, height <= ceil((3n-7)/2) as bounding-box side lengths.
   throws too_small / disconnected / not_planar */
planar_drawing_result draw_planar(const graph& g);
planar_drawing_result draw_planar(const plane_graph& pg);

} // namespace dld
